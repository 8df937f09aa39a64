#pragma once

// Formal Deligne-Lusztig combinations sum c R_{w, theta} keyed by canonical
// rational pair classes.

#include <map>
#include <string>
#include <vector>

#include "lt/stablefun.hpp"

namespace lt {

struct UniformFunction {
  ContextPtr ctx;
  std::map<PairKey, Cyclo> coeffs;  // canonical keys, zero coefficients dropped

  void add(const PairKey& canonical, const Cyclo& c);
  Cyclo coefficient(const PairKey& canonical) const;
};

/// (1/|W'|) sum_{w'} (-1)^{l(w')} q^{-nu'} R_{w'}(f_{w'}), f_{w'} the pushforward of f_w along A.
UniformFunction assemble(const DualMorphism& m, const StableFunction& f, ContextPtr target);

/// Sesquilinear; <R_a, R_b> = #{x : x.a = b}.
Cyclo pairing(const UniformFunction& u, const UniformFunction& v);

/// |G^F|_{p'} for split groups.
Integer group_order_pprime(const GroupContext& ctx);
/// eps_G eps_T |G^F|_{p'} / |T^{F_w}|
Rational dl_degree(const GroupContext& ctx, int w);
Cyclo degree(const UniformFunction& u);

struct Difference {
  PairKey key;
  Cyclo left;
  Cyclo right;
};

struct Comparison {
  bool equal = true;
  std::vector<Difference> diffs;
};

Comparison compare(const UniformFunction& u, const UniformFunction& v);

}  // namespace lt
