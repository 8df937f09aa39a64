#include "lt/stablefun.hpp"

#include <numeric>

#include "lt/error.hpp"
#include "lt/finitefield.hpp"

namespace lt {

namespace {

void same_context(const StableFunction& f, const StableFunction& g) {
  require(f.ctx->same_as(*g.ctx), Errc::ContextMismatch, "stable functions live on different groups");
}

int weyl_element_order(const SmallMatrix& m) {
  SmallMatrix pw = m;
  int k = 1;
  while (!pw.is_identity()) {
    pw = pw * m;
    ++k;
  }
  return k;
}

}  // namespace

StableFunction StableFunction::constant(ContextPtr ctx, const Cyclo& c) {
  const std::size_t n = ctx->classes().size();
  return StableFunction{std::move(ctx), std::vector<Cyclo>(n, c)};
}

const Cyclo& StableFunction::at(const QmodZVec& canonical_point) const {
  const int i = ctx->class_index(canonical_point);
  require(i >= 0, Errc::InvalidArgument, "unknown class " + canonical_point.to_string());
  return gamma[i];
}

StableFunction operator*(const StableFunction& f, const StableFunction& g) {
  same_context(f, g);
  StableFunction h = f;
  for (std::size_t i = 0; i < h.gamma.size(); ++i) h.gamma[i] *= g.gamma[i];
  return h;
}

StableFunction operator+(const StableFunction& f, const StableFunction& g) {
  same_context(f, g);
  StableFunction h = f;
  for (std::size_t i = 0; i < h.gamma.size(); ++i) h.gamma[i] += g.gamma[i];
  return h;
}

StableFunction operator*(const Cyclo& c, const StableFunction& f) {
  StableFunction h = f;
  for (auto& v : h.gamma) v *= c;
  return h;
}

StableFunction delta(ContextPtr ctx) { return StableFunction::constant(std::move(ctx), Cyclo(1)); }

Cyclo trace_psi_pair(const GroupContext& ctx, int w, const QmodZVec& theta, int64_t psi_k) {
  const auto& rd = ctx.datum();
  require(rd == build_standard("GL", rd.rank()), Errc::UnsupportedGroup, "trace_psi needs GL_n");
  require(ctx.frobenius().is_split(), Errc::UnsupportedGroup, "trace_psi needs the split form");
  const int64_t p = ctx.frobenius().p;
  require(psi_k % p != 0, Errc::TrivialAdditiveCharacter, "the additive character must be nontrivial");
  const auto& W = ctx.weyl();
  const auto& t = *ctx.torus(w);
  require(t.is_character(theta), Errc::InvalidArgument, "theta is not a character of T^{F_w}");

  // All tori are realized inside one field F_{q^M}, M the exponent of W, so
  // that the roots of unity used for different w are compatible.
  int64_t q = ctx.q();
  int e = 0;
  for (int64_t r = q; r > 1; r /= p) ++e;
  int M = 1;
  for (const auto& el : W.elements) M = std::lcm(M, weyl_element_order(el));
  const FiniteField& K = cached_field(p, e * M);
  const int64_t N = K.order() - 1;

  CycloAccumulator acc;
  for (int64_t x = 0; x < t.order(); ++x) {
    const QmodZVec pt = t.torsion_point(t.element(x));
    FiniteField::Elt tr = 0;
    for (std::size_t i = 0; i < pt.size(); ++i)
      tr = K.add(tr, K.exp(pt[i].num() * (N / pt[i].den())));
    const int64_t a = K.trace_to_prime(tr, e);
    const QmodZ v = t.evaluate(theta, x);
    acc.add(additive_character(p, psi_k, a), static_cast<uint64_t>(v.den()), -v.num());
  }
  Cyclo g = acc.result();
  return W.lengths[w] % 2 ? -g : g;
}

StableFunction trace_psi(ContextPtr ctx, int64_t psi_k) {
  StableFunction f = StableFunction::constant(ctx, Cyclo(0));
  const auto& cls = ctx->classes();
  for (std::size_t i = 0; i < cls.size(); ++i) f.gamma[i] = trace_psi_pair(*ctx, cls[i].witness_w, cls[i].point, psi_k);
  return f;
}

bool frobenius_compatible(const DualMorphism& m, const GroupContext& source, const GroupContext& target) {
  return source.q() == target.q() &&
         m.a * source.frobenius().sigma == target.frobenius().sigma * m.a;
}

StableFunction transfer(const DualMorphism& m, const StableFunction& f, ContextPtr target) {
  require(m.source == f.ctx->datum(), Errc::ContextMismatch, "function does not live on the morphism source");
  require(m.target == target->datum(), Errc::ContextMismatch, "target context does not match the morphism");
  require(m.valid, Errc::InvalidMorphism, "morphism has Weyl elements without lifts");
  require(frobenius_compatible(m, *f.ctx, *target), Errc::ContextMismatch, "incompatible Frobenius data");
  StableFunction out = StableFunction::constant(target, Cyclo(0));
  const auto& cls = target->classes();
  for (std::size_t i = 0; i < cls.size(); ++i) out.gamma[i] = f.at(rho_ss(m, *f.ctx, cls[i].point).point);
  return out;
}

TorusFunction extract_fw(const StableFunction& f, int w) {
  auto t = f.ctx->torus(w);
  require(t->order() <= FiniteTorus::kMaxFunctionOrder, Errc::GuardViolation, "torus too large");
  std::vector<Cyclo> coeffs;
  coeffs.reserve(t->order());
  for (int64_t k = 0; k < t->order(); ++k) coeffs.push_back(f.at(f.ctx->canonical_point(t->character(k))));
  return fourier_inverse(t, coeffs);
}

}  // namespace lt
