#pragma once

// Finite fields F_{p^d} with a designated primitive element, plus Gauss sums.

#include <cstdint>
#include <vector>

#include "lt/cyclo.hpp"

namespace lt {

/// Elements are encoded as integers in [0, p^d): base-p digits are the
/// coefficients of the polynomial representative (digit i = coefficient of x^i).
class FiniteField {
 public:
  static constexpr int64_t kMaxOrder = int64_t{1} << 22;

  FiniteField(int64_t p, int degree);

  int64_t p() const { return p_; }
  int degree() const { return d_; }
  int64_t order() const { return order_; }
  /// Monic modulus, coefficients c_0 .. c_d.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  using Elt = int64_t;
  static constexpr Elt zero() { return 0; }
  static constexpr Elt one() { return 1; }

  Elt add(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt pow(Elt a, int64_t e) const;
  /// zeta^i for the primitive element zeta = x.
  Elt exp(int64_t i) const;
  /// Discrete log base zeta; a must be nonzero.
  int64_t log(Elt a) const;
  /// a^{p^j}
  Elt frobenius(Elt a, int j) const;

  bool has_subfield(int s) const { return s >= 1 && d_ % s == 0; }
  int64_t subfield_order(int s) const;
  bool in_subfield(Elt a, int s) const;
  /// zeta^{(p^d - 1)/(p^s - 1)}, a generator of F_{p^s}^x.
  Elt subfield_generator(int s) const;
  /// Tr_{F_{p^s} / F_p}(a) for a in the subfield F_{p^s}; returned as an integer in [0, p).
  int64_t trace_to_prime(Elt a, int s) const;
  /// Norm F_{p^d} -> F_{p^s}.
  Elt norm(Elt a, int s) const;

 private:
  int64_t p_;
  int d_;
  int64_t order_;
  std::vector<int64_t> modulus_;
  std::vector<Elt> exp_;
  std::vector<int64_t> log_;
};

/// Shared instance per (p, degree); construction is deterministic.
const FiniteField& cached_field(int64_t p, int degree);

/// psi_k(a) = zeta_p^{k a} for a in F_p.
Cyclo additive_character(int64_t p, int64_t k, int64_t a);

/// sum over t in F_{p^s}^x of chi_j(t) psi_k(Tr t), where chi_j(g^i) = zeta^{j i}
/// for g = subfield_generator(s) and zeta of order p^s - 1.
Cyclo gauss_sum(const FiniteField& K, int s, int64_t j, int64_t psi_k);

}  // namespace lt
