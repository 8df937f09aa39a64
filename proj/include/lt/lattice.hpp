#pragma once

// Exact integer-lattice linear algebra: Smith normal form, finite cokernels,
// saturated kernels and Q/Z-valued pairings.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lt {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Integer>& entries() const { return data_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntVector apply(const IntVector& x) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
/// U_inv is carried along so cokernel elements can be lifted back.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  IntMatrix D;

  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

/// Element of Q/Z stored as a reduced fraction 0 <= num < den.
class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend QmodZ operator+(QmodZ a, QmodZ b);
  friend QmodZ operator-(QmodZ a, QmodZ b);
  friend QmodZ operator*(int64_t k, QmodZ a);
  QmodZ operator-() const { return QmodZ(-num_, den_); }
  friend bool operator==(const QmodZ&, const QmodZ&) = default;

  /// Canonical ordering: by denominator, then numerator.
  friend std::strong_ordering operator<=>(const QmodZ& a, const QmodZ& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

  std::string to_string() const;
  static QmodZ parse(const std::string& text);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

/// Point of (Q/Z)^r, optionally constrained to denominators coprime to p.
class QmodZVec {
 public:
  QmodZVec() = default;
  explicit QmodZVec(std::vector<QmodZ> coords, std::optional<int64_t> coprime_to = std::nullopt);

  std::size_t size() const { return coords_.size(); }
  const QmodZ& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<QmodZ>& coords() const { return coords_; }
  std::optional<int64_t> coprime_to() const { return coprime_to_; }

  bool is_zero() const;
  /// lcm of the denominators.
  int64_t order() const;

  /// M * y taken modulo Z^r, for an integer matrix M of matching width.
  QmodZVec transformed(const IntMatrix& M) const;

  friend bool operator==(const QmodZVec& a, const QmodZVec& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const QmodZVec& a, const QmodZVec& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  std::string to_string() const;  // "[a1/b1,...,ar/br]"
  static QmodZVec parse(const std::string& text);

 private:
  std::vector<QmodZ> coords_;
  std::optional<int64_t> coprime_to_;
};

/// Finite abelian group Z^m / A Z^n presented through a Smith decomposition.
/// Invariant factors equal to 1 are kept so coordinates have fixed width.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::vector<int64_t> factors, IntMatrix projection, IntMatrix lift);

  const std::vector<int64_t>& invariant_factors() const { return factors_; }
  /// Factors > 1, for display.
  std::vector<int64_t> nontrivial_factors() const;
  std::size_t ambient_rank() const { return projection_.cols(); }
  const IntMatrix& projection() const { return projection_; }
  const IntMatrix& lift_matrix() const { return lift_; }
  int64_t order() const { return order_; }
  int64_t exponent() const;

  using Coords = std::vector<int64_t>;

  Coords project(const IntVector& x) const;
  IntVector lift(const Coords& c) const;

  Coords add(const Coords& a, const Coords& b) const;
  Coords negate(const Coords& a) const;
  bool valid(const Coords& c) const;

  /// Mixed-radix enumeration, last coordinate fastest.
  Coords element(int64_t index) const;
  int64_t index(const Coords& c) const;

  std::string to_string() const;

 private:
  std::vector<int64_t> factors_;
  IntMatrix projection_;
  IntMatrix lift_;
  int64_t order_ = 1;
};

/// Cokernel of A : Z^n -> Z^m. Throws InfiniteCokernel when it is infinite.
FinAbGroup cokernel(const IntMatrix& A);

/// Basis of {x in Z^n : A x = 0}; the quotient Z^n / span is torsion-free.
std::vector<IntVector> saturated_kernel(const IntMatrix& A);

/// sum_i elt_i * chr_i / d_i mod 1.
QmodZ pair(const FinAbGroup& G, const FinAbGroup::Coords& elt, const FinAbGroup::Coords& chr);

int64_t to_int64(const Integer& z);

}  // namespace lt
