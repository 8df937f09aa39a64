#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "lt/error.hpp"

using namespace lt;

namespace {

int find_w(const RootDatum& rd, const SmallMatrix& m) { return rd.weyl().find(m); }

SmallMatrix swap2() { return SmallMatrix(2, 2, {0, 1, 1, 0}); }

Cyclo root(const QmodZ& v) { return Cyclo::root_of_unity(static_cast<uint64_t>(v.den()), v.num()); }

}  // namespace

TEST_CASE("fixed point examples") {
  auto gl2 = build_standard("GL", 2);
  auto fr = FrobeniusData::split(3, 2);
  auto ns = fixed_points(gl2, fr, find_w(gl2, swap2()));
  CHECK(ns.order() == 8);
  CHECK(ns.group().nontrivial_factors() == std::vector<int64_t>{8});
  auto sp = fixed_points(gl2, fr, gl2.weyl().identity);
  CHECK(sp.group().nontrivial_factors() == std::vector<int64_t>{2, 2});
  auto gl1 = build_standard("GL", 1);
  CHECK(fixed_points(gl1, FrobeniusData::split(5, 1), 0).order() == 4);
  CHECK_THROWS_AS(FrobeniusData::split(6, 1), Error);
}

TEST_CASE("torus orders match determinants and cycle types") {
  std::vector<RootDatum> data;
  for (int n = 1; n <= 3; ++n) data.push_back(build_standard("GL", n));
  for (int n = 2; n <= 3; ++n) {
    data.push_back(build_standard("SL", n));
    data.push_back(build_standard("PGL", n));
  }
  for (const auto& rd : data)
    for (int64_t q : {2, 3, 5}) {
      auto fr = FrobeniusData::split(q, rd.rank());
      for (std::size_t w = 0; w < rd.weyl().order(); ++w) {
        auto t = fixed_points(rd, fr, static_cast<int>(w));
        IntMatrix M = Integer(q) * rd.weyl().elements[w].to_int_matrix() - IntMatrix::identity(rd.rank());
        CHECK(Integer(t.order()) == abs(M.determinant()));
      }
    }
  // GL3, q = 2: cycle types (1,1,1), (2,1), (3)
  auto gl3 = build_standard("GL", 3);
  std::multiset<int64_t> orders;
  for (std::size_t w = 0; w < 6; ++w) orders.insert(fixed_points(gl3, FrobeniusData::split(2, 3), static_cast<int>(w)).order());
  CHECK(orders == std::multiset<int64_t>{1, 3, 3, 3, 7, 7});
}

TEST_CASE("characters") {
  auto gl2 = build_standard("GL", 2);
  auto fr = FrobeniusData::split(3, 2);
  auto t = fixed_points(gl2, fr, find_w(gl2, swap2()));
  auto chars = t.characters();
  CHECK(chars.size() == 8);
  std::set<QmodZVec> distinct(chars.begin(), chars.end());
  CHECK(distinct.size() == 8);
  for (std::size_t k = 0; k < chars.size(); ++k) {
    CHECK(t.is_character(chars[k]));
    CHECK(t.character_index(chars[k]) == static_cast<int64_t>(k));
  }
  CHECK_FALSE(t.is_character(QmodZVec::parse("[1/2,0]")));
}

TEST_CASE("evaluation does not depend on the presentation") {
  // Same torus presented through a conjugated lattice basis.
  auto gl2 = build_standard("GL", 2);
  auto fr = FrobeniusData::split(5, 2);
  for (std::size_t w = 0; w < 2; ++w) {
    auto t = fixed_points(gl2, fr, static_cast<int>(w));
    IntMatrix B{{2, 1}, {1, 1}};  // unimodular
    IntMatrix Binv{{1, -1}, {-1, 2}};
    for (const auto& y : t.characters()) {
      QmodZVec y2 = y.transformed(Binv.transpose());
      for (int64_t x = 0; x < t.order(); ++x) {
        IntVector lx = t.lift(t.element(x));
        IntVector lx2 = B.apply(lx);
        QmodZ direct = t.evaluate(y, x);
        QmodZ other;
        for (int j = 0; j < 2; ++j) other = other + to_int64(lx2[j] % y2[j].den()) * y2[j];
        CHECK(direct == other);
      }
    }
  }
}

TEST_CASE("tame stabilizers") {
  auto sl2 = build_standard("SL", 2);
  auto st = tame_stabilizers(sl2, QmodZVec::parse("[1/2]"));
  CHECK(st.W_chi.order() == 2);
  CHECK(st.W_chi_circ.order() == 1);
  auto pgl2 = build_standard("PGL", 2);
  st = tame_stabilizers(pgl2, QmodZVec::parse("[1/2]"));
  CHECK(st.W_chi.order() == 2);
  CHECK(st.W_chi_circ.order() == 2);
  auto gl3 = build_standard("GL", 3);
  st = tame_stabilizers(gl3, QmodZVec::parse("[0,0,0]"));
  CHECK(st.W_chi.order() == 6);
  CHECK(st.W_chi_circ.order() == 6);
  // W^o is normal in W_chi
  const auto& W = gl3.weyl();
  st = tame_stabilizers(gl3, QmodZVec::parse("[1/3,1/3,0]"));
  for (int x : st.W_chi.members) {
    for (int h : st.W_chi_circ.members) CHECK(st.W_chi_circ.contains(W.multiply(W.multiply(x, h), W.inverses[x])));
  }
}

TEST_CASE("convolution and Fourier") {
  auto gl2 = build_standard("GL", 2);
  auto fr = FrobeniusData::split(3, 2);
  auto t = std::make_shared<const FiniteTorus>(gl2, fr, find_w(gl2, swap2()));
  auto d = TorusFunction::delta(t);
  auto chars = t->characters();
  auto g = TorusFunction::character(t, chars[3]);
  CHECK(convolve(d, g) == g);
  for (const auto& y : chars) CHECK(fourier_coefficient(g, y) == (y == chars[3] ? Cyclo(8) : Cyclo(0)));

  // f = indicator of a generator of Z/8
  int64_t gen = -1;
  for (int64_t x = 0; x < 8 && gen < 0; ++x) {
    std::set<int64_t> seen{0};
    int64_t cur = x;
    while (cur != 0) {
      seen.insert(cur);
      cur = t->add_index(cur, x);
    }
    if (seen.size() == 8) gen = x;
  }
  REQUIRE(gen >= 0);
  auto f = TorusFunction::zero(t);
  f.values[gen] = Cyclo(1);
  for (const auto& y : chars) CHECK(fourier_coefficient(f, y) == root(t->evaluate(y, gen)).conj());

  // eigen-equation and inversion
  std::vector<Cyclo> coeffs;
  for (std::size_t k = 0; k < chars.size(); ++k) coeffs.push_back(Cyclo::root_of_unity(12, static_cast<int64_t>(k)) + Cyclo(static_cast<long>(k)));
  auto h = fourier_inverse(t, coeffs);
  for (std::size_t k = 0; k < chars.size(); ++k) {
    CHECK(fourier_coefficient(h, chars[k]) == coeffs[k]);
    auto th = TorusFunction::character(t, chars[k]);
    auto lhs = convolve(h, th);
    for (auto& v : th.values) v *= fourier_coefficient(h, chars[k]);
    CHECK(lhs == th);
  }
}

TEST_CASE("character orthogonality") {
  for (const char* name : {"GL(2)", "SL(2)", "PGL(2)", "GL(3)"})
    for (int64_t q : {2, 3, 5}) {
      auto rd = datum_from_name(name);
      auto fr = FrobeniusData::split(q, rd.rank());
      for (std::size_t w = 0; w < rd.weyl().order(); ++w) {
        FiniteTorus t(rd, fr, static_cast<int>(w));
        if (t.order() > 200) continue;
        const auto e = static_cast<uint64_t>(t.exponent());
        for (int64_t a = 0; a < t.order(); ++a) {
          for (int64_t x = 0; x < t.order(); ++x)
            CHECK(t.evaluate(t.character(a), x) == QmodZ(t.pair_index(a, x), t.exponent()));
          for (int64_t b = 0; b < t.order(); ++b) {
            CycloAccumulator acc(e);
            for (int64_t x = 0; x < t.order(); ++x) acc.add_root(e, t.pair_index(a, x) - t.pair_index(b, x));
            CHECK(acc.result() == (a == b ? Cyclo(static_cast<long>(t.order())) : Cyclo(0)));
          }
        }
      }
    }
}

TEST_CASE("pushforward and pullback examples") {
  auto gl1 = build_standard("GL", 1), gl2 = build_standard("GL", 2);
  auto fr5 = FrobeniusData::split(5, 1);
  auto t = std::make_shared<const FiniteTorus>(gl1, fr5, 0);
  auto sq = analyze(gl1, gl1, IntMatrix{{2}});
  auto ones = TorusFunction::zero(t);
  for (auto& v : ones.values) v = Cyclo(1);
  auto pf = pushforward(sq, ones, t);
  int squares = 0;
  for (int64_t y = 0; y < 4; ++y) {
    bool is_square = false;
    for (int64_t x = 0; x < 4; ++x) is_square |= t->add_index(x, x) == y;
    CHECK(pf.values[y] == (is_square ? Cyclo(2) : Cyclo(0)));
    squares += is_square;
  }
  CHECK(squares == 2);

  auto id = identity_morphism(gl2);
  auto fr3 = FrobeniusData::split(3, 2);
  auto s = std::make_shared<const FiniteTorus>(gl2, fr3, gl2.weyl().identity);
  auto f = TorusFunction::character(s, s->character(1));
  CHECK(pushforward(id, f, s) == f);

  auto det = analyze(gl2, gl1, IntMatrix{{1, 1}});
  auto t3 = std::make_shared<const FiniteTorus>(gl1, FrobeniusData::split(3, 1), 0);
  auto pd = pushforward(det, TorusFunction::delta(s), t3);
  CHECK(pd.values[0] == Cyclo(1));
  // fiber over the identity of det: {(1,1),(2,2)}
  auto ones2 = TorusFunction::zero(s);
  for (auto& v : ones2.values) v = Cyclo(1);
  CHECK(pushforward(det, ones2, t3).values[0] == Cyclo(2));

  auto th = pullback_char(det, QmodZVec::parse("[1/2]"), *s, *t3);
  CHECK(th == QmodZVec::parse("[1/2,1/2]"));
  for (int64_t x = 0; x < s->order(); ++x) {
    int64_t y = t3->index(t3->project(det.A.apply(s->lift(s->element(x)))));
    CHECK(s->evaluate(th, x) == t3->evaluate(QmodZVec::parse("[1/2]"), y));
  }
  auto p3 = analyze(gl1, gl1, IntMatrix{{3}});
  auto t7 = FiniteTorus(gl1, FrobeniusData::split(7, 1), 0);
  CHECK(pullback_char(p3, QmodZVec::parse("[1/6]"), t7, t7) == QmodZVec::parse("[1/2]"));

  auto swapped = std::make_shared<const FiniteTorus>(gl2, fr3, find_w(gl2, swap2()));
  CHECK_THROWS_AS(pushforward(id, f, swapped), Error);
}

TEST_CASE("pushforward and pullback are adjoint") {
  for (const auto& nm : fixtures::test_morphisms())
    for (int64_t q : {3, 5}) {
      CAPTURE(nm.name);
      const auto& m = nm.m;
      auto frs = FrobeniusData::split(q, m.source.rank());
      auto frt = FrobeniusData::split(q, m.target.rank());
      for (std::size_t wp = 0; wp < m.target.weyl().order(); ++wp) {
        int w = m.lift_representative(static_cast<int>(wp));
        auto s = std::make_shared<const FiniteTorus>(m.source, frs, w);
        auto t = std::make_shared<const FiniteTorus>(m.target, frt, static_cast<int>(wp));
        if (s->order() > 200) continue;
        auto f = TorusFunction::zero(s);
        for (int64_t x = 0; x < s->order(); ++x) f.values[x] = Cyclo::root_of_unity(7, x * x) + Cyclo(x % 3);
        auto pf = pushforward(m, f, t);
        for (const auto& th : t->characters())
          CHECK(fourier_coefficient(pf, th) == fourier_coefficient(f, pullback_char(m, th, *s, *t)));
      }
    }
}
