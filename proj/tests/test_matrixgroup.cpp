#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lt/error.hpp"
#include "lt/matrixgroup.hpp"
#include "lt/serialize.hpp"

#include <fstream>
#include <sstream>

using namespace lt;

namespace {

int64_t class_size_sum(const MatGroup& g) {
  int64_t s = 0;
  for (std::size_t c = 0; c < g.num_classes(); ++c) s += g.class_size(static_cast<int>(c));
  return s;
}

}  // namespace

TEST_CASE("group orders and classes") {
  MatGroup gl2("GL2", 3), sl2("SL2", 5), pgl2("PGL2", 3);
  CHECK(gl2.order() == 48);
  CHECK(gl2.num_classes() == 8);
  CHECK(sl2.order() == 120);
  CHECK(pgl2.order() == 24);
  for (int64_t q : {2, 3, 4, 5, 7}) {
    MatGroup g("GL2", q);
    CHECK(static_cast<int64_t>(g.order()) == (q * q - 1) * (q * q - q));
    CHECK(static_cast<int64_t>(g.num_classes()) == q * q - 1);
    CHECK(class_size_sum(g) == static_cast<int64_t>(g.order()));
  }
  CHECK_THROWS_AS(MatGroup("GL2", 9), Error);
  CHECK_THROWS_AS(MatGroup("GL3", 3), Error);
}

TEST_CASE("class map is constant on conjugates") {
  MatGroup g("PGL2", 5);
  for (std::size_t x = 0; x < g.order(); x += 7)
    for (std::size_t h = 0; h < g.order(); h += 5) {
      const int y = g.multiply(g.multiply(static_cast<int>(h), static_cast<int>(x)), g.inverse(static_cast<int>(h)));
      CHECK(g.class_of(y) == g.class_of(static_cast<int>(x)));
    }
}

TEST_CASE("torus embeddings are injective homomorphisms") {
  for (const char* name : {"GL2", "SL2", "PGL2", "GL1", "T2"})
    for (int64_t q : {2, 3, 4, 5}) {
      MatGroup g(name, q);
      const auto& ctx = *g.context();
      for (std::size_t w = 0; w < ctx.weyl().order(); ++w) {
        const auto T = ctx.torus(static_cast<int>(w));
        for (int64_t a = 0; a < T->order(); ++a)
          for (int64_t b = 0; b < T->order(); b += 3)
            CHECK(g.torus_element(static_cast<int>(w), T->add_index(a, b)) ==
                  g.multiply(g.torus_element(static_cast<int>(w), a), g.torus_element(static_cast<int>(w), b)));
        CHECK(g.torus_element(static_cast<int>(w), 0) == g.identity());
      }
    }
}

TEST_CASE("Harish-Chandra induction") {
  MatGroup g("GL2", 3);
  const int one = g.class_of(g.identity());
  auto triv = hc_induction(g, QmodZVec::parse("[0,0]"));
  CHECK(triv.values[one] == Cyclo(4));
  CHECK(inner_cf(triv, triv) == Cyclo(2));
  auto reg = hc_induction(g, QmodZVec::parse("[0,1/2]"));
  CHECK(inner_cf(reg, reg) == Cyclo(1));
  // zero on elliptic regular classes
  const int sw = 1 - g.datum().weyl().identity;
  const auto Ts = g.context()->torus(sw);
  for (int64_t x = 0; x < Ts->order(); ++x) {
    const int e = g.torus_element(sw, x);
    if (g.class_size(g.class_of(e)) == 1) continue;
    CHECK(reg.values[g.class_of(e)] == Cyclo(0));
  }
}

TEST_CASE("DL tables load and validate") {
  for (const char* name : {"GL2", "SL2", "PGL2"})
    for (int64_t q : {2, 3, 4, 5, 7}) {
      MatGroup g(name, q);
      auto t = DLTable::load(g, default_data_dir());
      CHECK(t.rows().size() == g.context()->pair_classes().size());
    }
  for (const char* name : {"GL1", "T2"}) {
    MatGroup g(name, 5);
    CHECK_NOTHROW(DLTable::load(g, "/nonexistent"));
  }
  MatGroup g("GL2", 3);
  CHECK_THROWS_AS(DLTable::load(g, "/nonexistent"), Error);
  auto t = DLTable::load(g, default_data_dir());
  const int sw = 1 - g.datum().weyl().identity;
  CHECK(t.character(g.context()->canonical_pair({sw, QmodZVec::parse("[0,0]")})).values[g.class_of(g.identity())] ==
        Cyclo(-2));
}

TEST_CASE("tampered table fails validation") {
  MatGroup g("GL2", 3);
  std::ifstream in(default_data_dir() + "/GL2_q3.json");
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = Json::parse(ss.str());
  auto& v = j["pairs"][0]["values"].begin().value();
  v = cyclo_to_json(cyclo_from_json(v) + Cyclo(1));
  try {
    DLTable::from_json(g, j.dump());
    FAIL("expected ValidationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ValidationFailed);
  }
}

TEST_CASE("delta is realized exactly") {
  for (const char* name : {"GL2", "SL2", "PGL2"})
    for (int64_t q : {3, 5}) {
      MatGroup g(name, q);
      auto t = DLTable::load(g, default_data_dir());
      auto ctx = g.context();
      auto u = assemble(identity_morphism(g.datum()), delta(ctx), ctx);
      CHECK(realize(t, u) == ClassFunction::delta(g));
    }
}

TEST_CASE("pairing agrees with inner products") {
  for (const char* name : {"GL2", "SL2"})
    for (int64_t q : {3, 5}) {
      MatGroup g(name, q);
      auto t = DLTable::load(g, default_data_dir());
      auto ctx = g.context();
      for (const auto& a : ctx->pair_classes())
        for (const auto& b : ctx->pair_classes()) {
          UniformFunction ua{ctx, {}}, ub{ctx, {}};
          ua.add(a, Cyclo(1));
          ub.add(b, Cyclo(1));
          CHECK(pairing(ua, ub) == inner_cf(t.character(a), t.character(b)));
        }
    }
}

TEST_CASE("stable functions are eigenfunctions") {
  MatGroup g("GL2", 3);
  auto t = DLTable::load(g, default_data_dir());
  ClassAlgebra alg(g);
  auto ctx = g.context();
  const auto delta_cf = ClassFunction::delta(g);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    auto f = fixtures::random_stable(ctx, rng);
    auto fcf = realize(t, assemble(identity_morphism(g.datum()), f, ctx));
    CHECK(alg.convolve(delta_cf, fcf) == fcf);
    for (const auto& pr : ctx->pair_classes()) {
      const auto& R = t.character(pr);
      CHECK(alg.convolve(fcf, R) == f.at(kappa(*ctx, pr.w, pr.theta).point) * R);
    }
  }
}

TEST_CASE("transfer end to end") {
  const auto gl2 = build_standard("GL", 2);
  for (int64_t q : {3, 5}) {
    auto src = GroupContext::split(gl2, q);
    for (const char* target : {"GL1", "T2"}) {
      MatGroup g(target, q);
      auto t = DLTable::load(g, default_data_dir());
      const auto m = std::string(target) == "GL1" ? analyze(gl2, g.datum(), IntMatrix{{1, 1}})
                                                  : analyze(gl2, g.datum(), IntMatrix::identity(2));
      std::mt19937_64 rng(q);
      auto f = fixtures::random_stable(src, rng);
      auto left = realize(t, assemble(m, f, g.context()));
      auto right =
          realize(t, assemble(identity_morphism(g.datum()), transfer(m, f, g.context()), g.context()));
      CHECK(left == right);
    }
  }
}

TEST_CASE("trace function eigenvalues") {
  for (int64_t q : {2, 3, 5}) {
    MatGroup g("GL2", q);
    auto t = DLTable::load(g, default_data_dir());
    ClassAlgebra alg(g);
    auto ctx = g.context();
    auto tr = trace_function(g);
    auto gamma = trace_psi(ctx);
    for (const auto& pr : ctx->pair_classes()) {
      const auto& R = t.character(pr);
      const Cyclo ev = gamma.at(kappa(*ctx, pr.w, pr.theta).point);
      CHECK(alg.convolve(tr, R) == Cyclo(q) * ev * R);
    }
  }
}

TEST_CASE("Gauss sums") {
  {
    const auto& K = cached_field(3, 1);
    auto g = gauss_sum(K, 1, 1, 1);
    CHECK(g * g == Cyclo(-3));
    CHECK(g * g.conj() == Cyclo(3));
    CHECK(gauss_sum(K, 1, 0, 1) == Cyclo(-1));
  }
  for (int64_t q : {2, 3, 4, 5, 7}) {
    const int64_t p = prime_of(q);
    const int s = q == 4 ? 2 : 1;
    const auto& K = cached_field(p, s);
    for (int64_t j = 1; j < q - 1; ++j) {
      auto g = gauss_sum(K, s, j, 1);
      CHECK(g * g.conj() == Cyclo(q));
    }
  }
  // Hasse-Davenport: -g(chi o N, psi o Tr) = (-g(chi, psi))^m, both sums taken inside F_{q^m}.
  for (int64_t q : {2, 3, 5})
    for (int m : {2, 3}) {
      const auto& K = cached_field(q, m);
      const int64_t lift = (K.order() - 1) / (q - 1);
      for (int64_t j = 0; j < q - 1; ++j) {
        const auto base = -gauss_sum(K, 1, j, 1);
        Cyclo rhs(1);
        for (int i = 0; i < m; ++i) rhs *= base;
        CHECK(-gauss_sum(K, m, j * lift, 1) == rhs);
      }
    }
  CHECK_THROWS_AS(gauss_sum(cached_field(3, 1), 1, 1, 3), Error);
}

TEST_CASE("eigen-equation on SL2 and PGL2") {
  for (const char* name : {"SL2", "PGL2"})
    for (int64_t q : {3, 5}) {
      MatGroup g(name, q);
      auto t = DLTable::load(g, default_data_dir());
      ClassAlgebra alg(g);
      auto ctx = g.context();
      std::mt19937_64 rng(q);
      auto f = fixtures::random_stable(ctx, rng);
      auto fcf = realize(t, assemble(identity_morphism(g.datum()), f, ctx));
      for (const auto& pr : ctx->pair_classes()) {
        const auto& R = t.character(pr);
        CHECK(alg.convolve(fcf, R) == f.at(kappa(*ctx, pr.w, pr.theta).point) * R);
      }
    }
}

TEST_CASE("transfer end to end onto PGL2") {
  const auto sl2 = build_standard("SL", 2), gl2 = build_standard("GL", 2), pgl2 = build_standard("PGL", 2);
  for (int64_t q : {3, 5}) {
    MatGroup g("PGL2", q);
    auto t = DLTable::load(g, default_data_dir());
    for (const auto& m : {analyze(sl2, pgl2, IntMatrix{{2}}), analyze(gl2, pgl2, IntMatrix{{1, -1}})}) {
      auto src = GroupContext::split(m.source, q);
      std::mt19937_64 rng(q + 10);
      auto f = fixtures::random_stable(src, rng);
      CHECK(realize(t, assemble(m, f, g.context())) ==
            realize(t, assemble(identity_morphism(pgl2), transfer(m, f, g.context()), g.context())));
    }
  }
}
