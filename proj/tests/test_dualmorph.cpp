#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lt/error.hpp"

using namespace lt;

TEST_CASE("analyze examples") {
  auto gl1 = build_standard("GL", 1), gl2 = build_standard("GL", 2);
  auto diag = analyze(gl2, gl1, IntMatrix{{1, 1}});
  CHECK(diag.levi_roots.size() == 2);
  CHECK(diag.W_L.order() == 2);
  CHECK(diag.valid);
  CHECK(diag.lift(0).size() == 2);

  auto id = identity_morphism(gl2);
  CHECK(id.W_L.order() == 1);
  for (std::size_t w = 0; w < gl2.weyl().order(); ++w) CHECK(id.lift(static_cast<int>(w)) == std::vector<int>{static_cast<int>(w)});

  auto levi = analyze(gl2, build_standard("Torus", 2), IntMatrix::identity(2));
  CHECK(levi.W_L.order() == 1);
  CHECK(levi.levi_roots.empty());
  CHECK(levi.valid);

  CHECK_THROWS_AS(analyze(gl2, gl1, IntMatrix{{1, 1, 1}}), Error);
}

TEST_CASE("lift examples") {
  auto gl1 = build_standard("GL", 1), gl2 = build_standard("GL", 2);
  auto proj = analyze(gl2, gl1, IntMatrix{{1, 0}});
  CHECK(proj.lift(0) == std::vector<int>{gl2.weyl().identity});
  CHECK(proj.W_L.order() == 1);
  CHECK(proj.valid);

  // T2 -> GL2 with an unequal scaling: the swap has no lift.
  auto bad = analyze(build_standard("Torus", 2), gl2, IntMatrix{{1, 0}, {0, 2}});
  CHECK_FALSE(bad.valid);
  int swap = 1 - gl2.weyl().identity;
  try {
    bad.lift(swap);
    FAIL("expected NoLift");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoLift);
  }
}

TEST_CASE("compose and from_weights") {
  auto gl1 = build_standard("GL", 1), gl2 = build_standard("GL", 2);
  auto diag = analyze(gl2, gl1, IntMatrix{{1, 1}});
  auto c = compose(identity_morphism(gl2), diag);
  CHECK(c.A == IntMatrix{{1, 1}});
  for (const auto& nm : fixtures::test_morphisms()) {
    auto left = compose(identity_morphism(nm.m.source), nm.m);
    CHECK(left.A == nm.m.A);
    auto right = compose(nm.m, identity_morphism(nm.m.target));
    CHECK(right.A == nm.m.A);
  }
  auto p2 = analyze(gl1, gl1, IntMatrix{{2}}), p3 = analyze(gl1, gl1, IntMatrix{{3}});
  CHECK(compose(p2, p3).A == IntMatrix{{6}});
  CHECK_THROWS_AS(compose(diag, diag), Error);

  CHECK(from_weights(2, gl1, {{1}, {1}}).A == IntMatrix{{1, 1}});
  CHECK(from_weights(2, gl1, {{1}, {-1}}).A == IntMatrix{{1, -1}});
  CHECK(from_weights(2, gl1, {{2}, {0}}).A == IntMatrix{{2, 0}});
  try {
    from_weights(3, gl1, {{1}});
    FAIL("expected WeightCountMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WeightCountMismatch);
  }
  auto sym2 = from_weights(3, gl2, {{2, 0}, {1, 1}, {0, 2}});
  CHECK(sym2.A == IntMatrix{{2, 1, 0}, {0, 1, 2}});
  CHECK(sym2.valid);
}

TEST_CASE("W_L two ways and coset structure") {
  for (const auto& nm : fixtures::test_morphisms()) {
    CAPTURE(nm.name);
    const auto& m = nm.m;
    CHECK(m.W_L == m.W_L_generated);
    CHECK(m.valid);
    for (std::size_t wp = 0; wp < m.target.weyl().order(); ++wp)
      CHECK(is_single_normalizing_coset(m.source.weyl(), m.W_L, m.lift(static_cast<int>(wp))));
  }
}

TEST_CASE("lift tables are functorial") {
  auto ms = fixtures::test_morphisms();
  for (const auto& outer : ms)
    for (const auto& inner : ms) {
      if (!(inner.m.source == outer.m.target)) continue;
      CAPTURE(outer.name);
      CAPTURE(inner.name);
      auto c = compose(outer.m, inner.m);
      for (std::size_t w2 = 0; w2 < c.target.weyl().order(); ++w2) {
        // any lift of a lift is a lift of the composition
        for (int w1 : inner.m.lift(static_cast<int>(w2)))
          for (int w : outer.m.lift(w1)) {
            const auto& set = c.lift(static_cast<int>(w2));
            CHECK(std::find(set.begin(), set.end(), w) != set.end());
          }
      }
    }
}

TEST_CASE("stabilizers of pulled-back characters contain the lifts") {
  for (const auto& nm : fixtures::test_morphisms()) {
    CAPTURE(nm.name);
    int64_t checked = 0;
    CHECK(fixtures::stabilizer_lift_counterexamples(nm.m, 12, &checked) == 0);
    CHECK(checked > 0);
  }
}
