#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lt/error.hpp"

using namespace lt;

namespace {

int swap_index(const RootDatum& rd) { return rd.weyl().find(SmallMatrix(2, 2, {0, 1, 1, 0})); }

}  // namespace

TEST_CASE("class enumeration counts") {
  auto gl2 = build_standard("GL", 2);
  auto c3 = GroupContext::split(gl2, 3);
  CHECK(enumerate_classes(*c3).size() == 6);
  CHECK(c3->pair_classes().size() == 8);
  CHECK(enumerate_classes(*GroupContext::split(gl2, 5)).size() == 20);
  auto gl1 = GroupContext::split(build_standard("GL", 1), 3);
  REQUIRE(enumerate_classes(*gl1).size() == 2);
  CHECK(gl1->classes()[0].point == QmodZVec::parse("[0]"));
  CHECK(gl1->classes()[1].point == QmodZVec::parse("[1/2]"));

  std::set<std::string> labels;
  for (const auto& c : c3->classes()) labels.insert(c.point.to_string());
  CHECK(labels == std::set<std::string>{"[0,0]", "[0,1/2]", "[1/2,1/2]", "[1/8,3/8]", "[1/4,3/4]", "[5/8,7/8]"});
  CHECK(c3->classes()[0].label() == "\xCE\xB8\xCC\x83=[0,0]");
  for (const auto& c : c3->classes()) CHECK(c3->torus(c.witness_w)->is_character(c.point));
}

TEST_CASE("kappa examples") {
  auto gl2 = build_standard("GL", 2);
  auto ctx = GroupContext::split(gl2, 3);
  const int id = gl2.weyl().identity, sw = swap_index(gl2);
  auto zero = QmodZVec::parse("[0,0]");
  CHECK(kappa(*ctx, id, zero) == kappa(*ctx, sw, zero));
  CHECK(ctx->canonical_pair({id, zero}) != ctx->canonical_pair({sw, zero}));

  // on Z/8 the swap acts as multiplication by 3 on characters
  const auto& t = *ctx->torus(sw);
  auto chars = t.characters();
  for (const auto& y : chars) {
    QmodZVec y3 = y.transformed(IntMatrix{{3, 0}, {0, 3}});
    CHECK(kappa(*ctx, sw, y) == kappa(*ctx, sw, y3));
    CHECK(ctx->act(sw, y) == y3);
  }

  auto gl1 = GroupContext::split(build_standard("GL", 1), 5);
  for (const auto& y : gl1->torus(0)->characters()) CHECK(kappa(*gl1, 0, y).point == y);
}

TEST_CASE("kappa is constant on rational pair classes") {
  for (const char* name : {"GL(2)", "SL(2)", "PGL(2)", "GL(1)", "T2"})
    for (int64_t q : {2, 3, 5}) {
      auto ctx = GroupContext::split(datum_from_name(name), q);
      const auto& W = ctx->weyl();
      for (std::size_t w = 0; w < W.order(); ++w)
        for (const auto& y : ctx->torus(static_cast<int>(w))->characters()) {
          auto k = kappa(*ctx, static_cast<int>(w), y);
          for (std::size_t x = 0; x < W.order(); ++x) {
            int w2 = ctx->twisted_conjugate(static_cast<int>(x), static_cast<int>(w));
            QmodZVec y2 = ctx->act(static_cast<int>(x), y);
            CHECK(ctx->torus(w2)->is_character(y2));
            CHECK(kappa(*ctx, w2, y2) == k);
            CHECK(ctx->canonical_pair({w2, y2}) == ctx->canonical_pair({static_cast<int>(w), y}));
          }
        }
      CHECK(ctx->pair_classes().size() >= ctx->classes().size());
      // distinct canonical pairs are not conjugate
      const auto& pairs = ctx->pair_classes();
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b)
          CHECK((ctx->transporter_count(pairs[a], pairs[b]) > 0) == (a == b));
    }
}

TEST_CASE("rho_ss examples") {
  auto gl1 = build_standard("GL", 1), gl2 = build_standard("GL", 2);
  auto src = GroupContext::split(gl2, 3);
  auto diag = analyze(gl2, gl1, IntMatrix{{1, 1}});
  CHECK(rho_ss(diag, *src, QmodZVec::parse("[1/2]")).point == QmodZVec::parse("[1/2,1/2]"));
  auto id = identity_morphism(gl2);
  for (const auto& c : src->classes()) CHECK(rho_ss(id, *src, c.point) == c);
  auto p2 = analyze(gl1, gl1, IntMatrix{{2}});
  auto g1 = GroupContext::split(gl1, 3);
  CHECK(rho_ss(p2, *g1, QmodZVec::parse("[1/2]")).point == QmodZVec::parse("[0]"));
}

TEST_CASE("compatibility square and functoriality") {
  auto ms = fixtures::test_morphisms();
  for (const auto& nm : ms)
    for (int64_t q : {3, 5}) {
      CAPTURE(nm.name);
      const auto& m = nm.m;
      auto src = GroupContext::split(m.source, q);
      auto tgt = GroupContext::split(m.target, q);
      for (std::size_t wp = 0; wp < tgt->weyl().order(); ++wp)
        for (const auto& th : tgt->torus(static_cast<int>(wp))->characters()) {
          auto image = rho_ss(m, *src, kappa(*tgt, static_cast<int>(wp), th).point);
          for (int w : m.lift(static_cast<int>(wp))) {
            auto pb = pullback_char(m, th, *src->torus(w), *tgt->torus(static_cast<int>(wp)));
            CHECK(kappa(*src, w, pb) == image);
          }
        }
    }
  for (const auto& outer : ms)
    for (const auto& inner : ms) {
      if (!(inner.m.source == outer.m.target)) continue;
      auto c = compose(outer.m, inner.m);
      auto a = GroupContext::split(outer.m.source, 3);
      auto b = GroupContext::split(outer.m.target, 3);
      auto z = GroupContext::split(inner.m.target, 3);
      for (const auto& cls : z->classes())
        CHECK(rho_ss(c, *a, cls.point) == rho_ss(outer.m, *a, rho_ss(inner.m, *b, cls.point).point));
    }
}
