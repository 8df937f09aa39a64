#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lt/error.hpp"
#include "lt/finitefield.hpp"

using namespace lt;

namespace {

Cyclo z3(int64_t k) { return Cyclo::root_of_unity(3, k); }

}  // namespace

TEST_CASE("ring operations") {
  auto gl1 = GroupContext::split(build_standard("GL", 1), 3);
  auto f = StableFunction::constant(gl1, Cyclo(1));
  f.gamma[1] = z3(1);
  auto sq = f * f;
  CHECK(sq.gamma[0] == Cyclo(1));
  CHECK(sq.gamma[1] == z3(2));
  CHECK(delta(gl1) * f == f);
  std::mt19937_64 rng(5);
  auto ctx = GroupContext::split(build_standard("GL", 2), 3);
  auto a = fixtures::random_stable(ctx, rng), b = fixtures::random_stable(ctx, rng);
  CHECK(a * b == b * a);
  CHECK(a + b == b + a);
  CHECK(Cyclo(2) * a == a + a);
  CHECK_THROWS_AS(a * f, Error);
}

TEST_CASE("transfer examples") {
  auto gl1 = build_standard("GL", 1), gl2 = build_standard("GL", 2);
  auto c2 = GroupContext::split(gl2, 3), c1 = GroupContext::split(gl1, 3);
  std::mt19937_64 rng(11);
  auto f = fixtures::random_stable(c2, rng);
  CHECK(transfer(identity_morphism(gl2), f, c2) == f);
  auto diag = analyze(gl2, gl1, IntMatrix{{1, 1}});
  CHECK(transfer(diag, delta(c2), c1) == delta(c1));
  auto tp = transfer(diag, trace_psi(c2), c1);
  CHECK(tp.at(QmodZVec::parse("[1/2]")) == Cyclo(-3));

  auto bad = analyze(build_standard("Torus", 2), gl2, IntMatrix{{1, 0}, {0, 2}});
  auto ct = GroupContext::split(build_standard("Torus", 2), 3);
  try {
    transfer(bad, StableFunction::constant(ct, Cyclo(1)), c2);
    FAIL("expected InvalidMorphism");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidMorphism);
  }
  CHECK_THROWS_AS(transfer(diag, f, GroupContext::split(gl1, 5)), Error);
}

TEST_CASE("transfer is a functorial ring homomorphism") {
  auto ms = fixtures::test_morphisms();
  std::mt19937_64 rng(17);
  for (const auto& nm : ms) {
    CAPTURE(nm.name);
    auto src = GroupContext::split(nm.m.source, 3), tgt = GroupContext::split(nm.m.target, 3);
    auto f = fixtures::random_stable(src, rng), g = fixtures::random_stable(src, rng);
    CHECK(transfer(nm.m, f * g, tgt) == transfer(nm.m, f, tgt) * transfer(nm.m, g, tgt));
    CHECK(transfer(nm.m, delta(src), tgt) == delta(tgt));
  }
  for (const auto& outer : ms)
    for (const auto& inner : ms) {
      if (!(inner.m.source == outer.m.target)) continue;
      auto a = GroupContext::split(outer.m.source, 3);
      auto b = GroupContext::split(outer.m.target, 3);
      auto z = GroupContext::split(inner.m.target, 3);
      auto f = fixtures::random_stable(a, rng);
      CHECK(transfer(compose(outer.m, inner.m), f, z) == transfer(inner.m, transfer(outer.m, f, b), z));
    }
}

TEST_CASE("extract_fw examples") {
  auto gl2 = build_standard("GL", 2);
  auto ctx = GroupContext::split(gl2, 3);
  for (std::size_t w = 0; w < 2; ++w)
    CHECK(extract_fw(delta(ctx), static_cast<int>(w)) == TorusFunction::delta(ctx->torus(static_cast<int>(w))));
  auto gl1 = GroupContext::split(build_standard("GL", 1), 3);
  auto f = StableFunction::constant(gl1, Cyclo(0));
  f.gamma[0] = Cyclo(2);
  auto fw = extract_fw(f, 0);
  for (const auto& v : fw.values) CHECK(v == Cyclo(1));
  for (const auto& v : extract_fw(StableFunction::constant(ctx, Cyclo(0)), 1).values) CHECK(v.is_zero());
}

TEST_CASE("eigen-equation") {
  std::mt19937_64 rng(23);
  for (int64_t q : {3, 5}) {
    auto ctx = GroupContext::split(build_standard("GL", 2), q);
    for (int trial = 0; trial < 3; ++trial) {
      auto f = fixtures::random_stable(ctx, rng);
      for (std::size_t w = 0; w < 2; ++w) {
        auto t = ctx->torus(static_cast<int>(w));
        auto fw = extract_fw(f, static_cast<int>(w));
        for (const auto& th : t->characters()) {
          auto chi = TorusFunction::character(t, th);
          auto lhs = convolve(fw, chi);
          const Cyclo g = f.at(kappa(*ctx, static_cast<int>(w), th).point);
          for (auto& v : chi.values) v *= g;
          CHECK(lhs == chi);
        }
      }
    }
  }
}

TEST_CASE("trace_psi examples") {
  auto ctx = GroupContext::split(build_standard("GL", 2), 3);
  const int id = ctx->weyl().identity, sw = 1 - id;
  auto zero = QmodZVec::parse("[0,0]");
  CHECK(trace_psi_pair(*ctx, id, zero) == Cyclo(1));
  CHECK(trace_psi_pair(*ctx, sw, zero) == Cyclo(1));
  CHECK(trace_psi(ctx).at(QmodZVec::parse("[1/2,1/2]")) == Cyclo(-3));
  CHECK_THROWS_AS(trace_psi(GroupContext::split(build_standard("SL", 2), 3)), Error);

  // rank one: the Gauss sum, with chi_j(g^i) = zeta^{ij} and theta(t^{-1}) = chi_j(t)^{-1}
  for (int64_t q : {3, 4, 5, 7}) {
    auto g1 = GroupContext::split(build_standard("GL", 1), q);
    FiniteField K(prime_of(q), q == 4 ? 2 : 1);
    const auto& t = *g1->torus(0);
    for (int64_t k = 0; k < t.order(); ++k) {
      auto th = t.character(k);
      const int64_t j = th[0].num() * ((q - 1) / th[0].den());
      CHECK(trace_psi_pair(*g1, 0, th) == gauss_sum(K, K.degree(), -j, 1));
    }
  }
}

TEST_CASE("trace_psi is constant on geometric classes") {
  for (int n : {2, 3})
    for (int64_t q : {2, 3, 5}) {
      auto ctx = GroupContext::split(build_standard("GL", n), q);
      auto f = trace_psi(ctx);
      for (std::size_t w = 0; w < ctx->weyl().order(); ++w)
        for (const auto& th : ctx->torus(static_cast<int>(w))->characters())
          {
            CAPTURE(n);
            CAPTURE(q);
            CAPTURE(w);
            CAPTURE(th);
            CHECK(trace_psi_pair(*ctx, static_cast<int>(w), th) == f.at(kappa(*ctx, static_cast<int>(w), th).point));
          }
    }
}

TEST_CASE("pushforward does not depend on the lift") {
  std::mt19937_64 rng(29);
  for (const auto& nm : fixtures::test_morphisms()) {
    CAPTURE(nm.name);
    auto src = GroupContext::split(nm.m.source, 3), tgt = GroupContext::split(nm.m.target, 3);
    auto f = fixtures::random_stable(src, rng);
    for (std::size_t wp = 0; wp < tgt->weyl().order(); ++wp) {
      const auto& lifts = nm.m.lift(static_cast<int>(wp));
      auto ref = pushforward(nm.m, extract_fw(f, lifts[0]), tgt->torus(static_cast<int>(wp)));
      for (int w : lifts) CHECK(pushforward(nm.m, extract_fw(f, w), tgt->torus(static_cast<int>(wp))) == ref);
    }
  }
}
