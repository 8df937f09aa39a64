#include "lt/dlengine.hpp"

#include <set>

#include "lt/error.hpp"

namespace lt {

void UniformFunction::add(const PairKey& canonical, const Cyclo& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(canonical);
  if (it == coeffs.end()) {
    coeffs.emplace(canonical, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

Cyclo UniformFunction::coefficient(const PairKey& canonical) const {
  auto it = coeffs.find(canonical);
  return it == coeffs.end() ? Cyclo(0) : it->second;
}

UniformFunction assemble(const DualMorphism& m, const StableFunction& f, ContextPtr target) {
  require(m.source == f.ctx->datum(), Errc::ContextMismatch, "function does not live on the morphism source");
  require(m.target == target->datum(), Errc::ContextMismatch, "target context does not match the morphism");
  require(m.valid, Errc::InvalidMorphism, "morphism has Weyl elements without lifts");
  require(frobenius_compatible(m, *f.ctx, *target), Errc::ContextMismatch, "incompatible Frobenius data");

  const auto& Wp = target->weyl();
  Rational base(1, static_cast<long>(Wp.order()));
  for (int i = 0; i < target->nu(); ++i) base /= target->q();

  UniformFunction out{target, {}};
  for (std::size_t wp = 0; wp < Wp.order(); ++wp) {
    const int w = m.lift_representative(static_cast<int>(wp));
    const TorusFunction fw = extract_fw(f, w);
    const auto tp = target->torus(static_cast<int>(wp));
    const TorusFunction fwp = pushforward(m, fw, tp);
    Rational scale = base / tp->order();
    if (Wp.lengths[wp] % 2) scale = -scale;
    const Cyclo s(scale);
    for (int64_t k = 0; k < tp->order(); ++k) {
      const QmodZVec theta = tp->character(k);
      const Cyclo c = fourier_coefficient(fwp, theta);
      if (c.is_zero()) continue;
      out.add(target->canonical_pair(PairKey{static_cast<int>(wp), theta}), s * c);
    }
  }
  return out;
}

Cyclo pairing(const UniformFunction& u, const UniformFunction& v) {
  require(u.ctx->same_as(*v.ctx), Errc::ContextMismatch, "uniform functions live on different groups");
  Cyclo acc(0);
  for (const auto& [a, ca] : u.coeffs) {
    auto it = v.coeffs.find(a);
    if (it == v.coeffs.end()) continue;
    acc += ca * it->second.conj() * Cyclo(static_cast<long>(u.ctx->stabilizer_order(a)));
  }
  return acc;
}

Integer group_order_pprime(const GroupContext& ctx) {
  require(ctx.frobenius().is_split(), Errc::NoOrderFormula, "order formula is only registered for split groups");
  const auto& W = ctx.weyl();
  Integer poincare = 0;
  for (int l : W.lengths) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(ctx.q()), static_cast<unsigned long>(l));
    poincare += t;
  }
  return poincare * ctx.torus(W.identity)->order();
}

Rational dl_degree(const GroupContext& ctx, int w) {
  Rational d(group_order_pprime(ctx), Integer(ctx.torus(w)->order()));
  d.canonicalize();
  return eps_sign(ctx.frobenius(), ctx.weyl().elements[w]) * d;
}

Cyclo degree(const UniformFunction& u) {
  Cyclo acc(0);
  for (const auto& [key, c] : u.coeffs) acc += c * Cyclo(dl_degree(*u.ctx, key.w));
  return acc;
}

Comparison compare(const UniformFunction& u, const UniformFunction& v) {
  require(u.ctx->same_as(*v.ctx), Errc::ContextMismatch, "uniform functions live on different groups");
  Comparison out;
  std::set<PairKey> keys;
  for (const auto& [k, c] : u.coeffs) keys.insert(k);
  for (const auto& [k, c] : v.coeffs) keys.insert(k);
  for (const auto& k : keys) {
    Cyclo a = u.coefficient(k), b = v.coefficient(k);
    if (!(a == b)) out.diffs.push_back(Difference{k, a, b});
  }
  out.equal = out.diffs.empty();
  return out;
}

}  // namespace lt
