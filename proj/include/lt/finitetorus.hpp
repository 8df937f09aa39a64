#pragma once

// Frobenius-twisted finite tori T^{F_w} = X_* / (q w sigma - 1) X_*, their
// characters as tame points, and the function algebra on them.

#include <cstdint>
#include <memory>
#include <vector>

#include "lt/cyclo.hpp"
#include "lt/dualmorph.hpp"
#include "lt/lattice.hpp"
#include "lt/rootdata.hpp"

namespace lt {

struct FrobeniusData {
  int64_t q = 0;
  int64_t p = 0;
  SmallMatrix sigma;  // on X_*

  static FrobeniusData split(int64_t q, int rank);
  /// Validates q = p^e and that sigma is a finite-order automorphism of the datum.
  static FrobeniusData make(const RootDatum& rd, int64_t q, const SmallMatrix& sigma);
  bool is_split() const { return sigma.is_identity(); }
};

/// Returns p when q is a prime power, 0 otherwise.
int64_t prime_of(int64_t q);

class FiniteTorus {
 public:
  static constexpr int64_t kMaxFunctionOrder = 100000;

  FiniteTorus(const RootDatum& rd, const FrobeniusData& fr, int w);

  int w() const { return w_; }
  int rank() const { return static_cast<int>(F_.rows()); }
  int64_t q() const { return q_; }
  int64_t p() const { return p_; }
  /// q * w * sigma on X_*.
  const IntMatrix& frobenius() const { return F_; }
  const FinAbGroup& group() const { return group_; }
  int64_t order() const { return group_.order(); }

  using Elt = FinAbGroup::Coords;

  Elt element(int64_t i) const { return group_.element(i); }
  int64_t index(const Elt& x) const { return group_.index(x); }
  Elt project(const IntVector& x) const { return group_.project(x); }
  IntVector lift(const Elt& x) const { return group_.lift(x); }
  int64_t add_index(int64_t a, int64_t b) const;
  int64_t neg_index(int64_t a) const;

  /// Does (F^T - 1) y = 0 in (Q/Z)^r hold?
  bool is_character(const QmodZVec& y) const;
  /// All characters, ordered by their dual coordinates (same mixed radix as elements).
  std::vector<QmodZVec> characters() const;
  QmodZVec character(int64_t k_index) const;
  /// Dual coordinates k with y = U^T (k / d) mod 1.
  Elt dual_coords(const QmodZVec& y) const;
  int64_t character_index(const QmodZVec& y) const { return group_.index(dual_coords(y)); }

  /// (F - 1)^{-1} lift(x) mod 1: the point of (X_* (x) Q/Z)^F matching x.
  QmodZVec torsion_point(const Elt& x) const;

  /// theta_y(x) = exp(2 pi i <y, lift x>) as an element of Q/Z.
  QmodZ evaluate(const QmodZVec& y, const Elt& x) const;
  QmodZ evaluate(const QmodZVec& y, int64_t x_index) const { return evaluate(y, element(x_index)); }

  int64_t exponent() const { return exponent_; }
  /// n with theta_k(x) = zeta_e^n, e = exponent(); k and x are element/character indices.
  int64_t pair_index(int64_t k, int64_t x) const;

  friend bool operator==(const FiniteTorus& a, const FiniteTorus& b) { return a.F_ == b.F_; }

 private:
  int w_;
  int64_t q_, p_;
  IntMatrix F_;
  IntMatrix U_;  // U (F - 1) V = D
  IntMatrix V_;
  FinAbGroup group_;
  int64_t exponent_ = 1;
};

FiniteTorus fixed_points(const RootDatum& rd, const FrobeniusData& fr, int w);

/// Dense function on a finite torus.
struct TorusFunction {
  std::shared_ptr<const FiniteTorus> torus;
  std::vector<Cyclo> values;  // indexed by element index

  static TorusFunction zero(std::shared_ptr<const FiniteTorus> t);
  static TorusFunction delta(std::shared_ptr<const FiniteTorus> t);
  static TorusFunction character(std::shared_ptr<const FiniteTorus> t, const QmodZVec& y);

  friend bool operator==(const TorusFunction& a, const TorusFunction& b) {
    return *a.torus == *b.torus && a.values == b.values;
  }
};

TorusFunction convolve(const TorusFunction& f, const TorusFunction& g);
/// sum_x f(x) theta(x^{-1})
Cyclo fourier_coefficient(const TorusFunction& f, const QmodZVec& y);
/// (1/|T|) sum_theta c(theta) theta, with c indexed like characters().
TorusFunction fourier_inverse(std::shared_ptr<const FiniteTorus> t, const std::vector<Cyclo>& coeffs);

struct TameStabilizers {
  Subgroup W_chi;
  Subgroup W_chi_circ;
};

/// W_chi = {w : w chi = chi}; W_chi^o generated by the reflections with <chi, alpha^vee> = 0.
TameStabilizers tame_stabilizers(const RootDatum& rd, const QmodZVec& chi);

/// Fiber sums along A : T^{F_w} -> T'^{F_w'}.
TorusFunction pushforward(const DualMorphism& m, const TorusFunction& f,
                          std::shared_ptr<const FiniteTorus> target);
/// theta = A^T theta' on T^{F_w}.
QmodZVec pullback_char(const DualMorphism& m, const QmodZVec& theta_prime, const FiniteTorus& source,
                       const FiniteTorus& target);
/// A (q w sigma) = (q' w' sigma') A
bool intertwines(const DualMorphism& m, const FiniteTorus& source, const FiniteTorus& target);

/// Signed dimension difference giving eps_G eps_T = (-1)^{dim ker(sigma - 1) - dim ker(w sigma - 1)}.
int eps_sign(const FrobeniusData& fr, const SmallMatrix& w);

}  // namespace lt
