#pragma once

// Dual morphisms given by their torus matrix A : X_*(T) -> X_*(T'), with the
// derived Levi roots, W_L and the Weyl lift table.

#include <vector>

#include "lt/lattice.hpp"
#include "lt/rootdata.hpp"

namespace lt {

struct DualMorphism {
  RootDatum source;  // G
  RootDatum target;  // G'
  IntMatrix A;       // rank(G') x rank(G)
  SmallMatrix a;     // same matrix, machine integers

  std::vector<int> levi_roots;  // {alpha : A alpha^vee = 0}
  Subgroup W_L;                 // {w : A w = A}
  Subgroup W_L_generated;       // generated by the Levi reflections
  bool valid = false;
  /// lifts[w'] = sorted {w : A w = w' A}; empty when w' has no lift.
  std::vector<std::vector<int>> lifts;

  const std::vector<int>& lift(int w_prime) const;  // throws NoLift
  /// Lexicographically least matrix in the lift coset.
  int lift_representative(int w_prime) const;
};

DualMorphism analyze(const RootDatum& source, const RootDatum& target, const IntMatrix& A);
DualMorphism identity_morphism(const RootDatum& rd);
/// outer : G' -> G, inner : G'' -> G' (on the dual side); result has matrix inner.A * outer.A.
DualMorphism compose(const DualMorphism& outer, const DualMorphism& inner);
/// rho^ : G'^ -> GL_n given by n weights in X_*(T'); the weights are the columns of A.
DualMorphism from_weights(int n, const RootDatum& target, const std::vector<Vec>& weights);

/// x W_L x^{-1} = W_L.
bool normalizes(const WeylGroup& W, const Subgroup& H, int x);
/// The lift set is exactly one left coset w W_L with w in N_W(W_L).
bool is_single_normalizing_coset(const WeylGroup& W, const Subgroup& W_L, const std::vector<int>& set);

}  // namespace lt
