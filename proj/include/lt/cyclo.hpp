#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value at level N is stored in the power basis 1, z, ..., z^{phi(N)-1}
// reduced modulo the N-th cyclotomic polynomial, as integer numerators over a
// single positive denominator. Rational results collapse to level 1.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lt/lattice.hpp"

namespace lt {

/// Coefficients of Phi_N (index = degree). Cached per level.
const std::vector<int64_t>& cyclotomic_polynomial(uint64_t N);
uint64_t euler_phi(uint64_t N);

class Cyclo {
 public:
  static constexpr uint64_t kMaxLevel = uint64_t{1} << 24;

  Cyclo() : num_(1), den_(1) {}
  Cyclo(long v) : num_{Integer(v)}, den_(1) {}  // NOLINT(implicit)
  Cyclo(const Rational& r);                      // NOLINT(implicit)

  static Cyclo root_of_unity(uint64_t N, int64_t k);
  /// sum_k coeffs[k] * zeta_N^k for a full length-N power array.
  static Cyclo from_power_array(uint64_t N, std::vector<Rational> coeffs);
  /// Canonical coefficients (length phi(N)).
  static Cyclo from_canonical(uint64_t N, const std::vector<Rational>& coeffs);

  uint64_t level() const { return level_; }
  std::vector<Rational> coeffs() const;
  Rational coefficient(std::size_t i) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  Cyclo lift_to_level(uint64_t M) const;
  Cyclo conj() const { return galois(static_cast<int64_t>(level_) - 1); }
  /// zeta_N -> zeta_N^k, gcd(k, N) = 1.
  Cyclo galois(int64_t k) const;
  Cyclo inverse() const;
  /// this * zeta_N^k
  Cyclo times_root(uint64_t N, int64_t k) const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  std::string to_string() const;

 private:
  Cyclo(uint64_t level, std::vector<Integer> num, Integer den);
  void normalize();
  static Cyclo reduce_power_array(uint64_t N, std::vector<Integer> arr, Integer den);

  uint64_t level_ = 1;
  std::vector<Integer> num_;
  Integer den_;
};

/// Sums of terms c * zeta^k accumulated in the power basis mod x^L - 1 and
/// reduced once at the end. The level grows to the lcm of everything added.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(uint64_t level = 1);

  void add(const Cyclo& c);
  /// c * zeta_N^k
  void add(const Cyclo& c, uint64_t N, int64_t k);
  /// n * zeta_N^k
  void add_root(uint64_t N, int64_t k, long n = 1);

  Cyclo result() const;

 private:
  void ensure_level(uint64_t N);
  uint64_t level_;
  std::vector<Rational> slots_;
};

uint64_t lcm_level(uint64_t a, uint64_t b);

}  // namespace lt
