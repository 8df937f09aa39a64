#pragma once

// Stable functions modeled by their gamma-values on geometric classes.

#include <map>
#include <string>

#include "lt/ssclasses.hpp"

namespace lt {

struct StableFunction {
  ContextPtr ctx;
  std::vector<Cyclo> gamma;  // indexed like ctx->classes()

  static StableFunction constant(ContextPtr ctx, const Cyclo& c);
  const Cyclo& at(const QmodZVec& canonical_point) const;

  friend bool operator==(const StableFunction& a, const StableFunction& b) {
    return a.ctx->same_as(*b.ctx) && a.gamma == b.gamma;
  }
};

/// Convolution product: pointwise product of gamma-values.
StableFunction operator*(const StableFunction& f, const StableFunction& g);
StableFunction operator+(const StableFunction& f, const StableFunction& g);
StableFunction operator*(const Cyclo& c, const StableFunction& f);

StableFunction delta(ContextPtr ctx);

/// gamma(class) = (-1)^{l(w)} sum_{t in T^{F_w}} psi(tr t) theta(t^{-1}) for GL_n, split.
StableFunction trace_psi(ContextPtr ctx, int64_t psi_k = 1);
/// The defining sum for one pair (w, theta).
Cyclo trace_psi_pair(const GroupContext& ctx, int w, const QmodZVec& theta, int64_t psi_k = 1);

/// gamma'(c') = gamma(rho_ss(c')).
StableFunction transfer(const DualMorphism& m, const StableFunction& f, ContextPtr target);
/// Frobenius data are compatible: same q and A sigma = sigma' A.
bool frobenius_compatible(const DualMorphism& m, const GroupContext& source, const GroupContext& target);

/// f_w(x) = (1/|T|) sum_theta gamma(kappa(w, theta)) theta(x).
TorusFunction extract_fw(const StableFunction& f, int w);

}  // namespace lt
