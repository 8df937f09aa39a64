#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "lt/dlengine.hpp"

namespace fixtures {

struct NamedMorphism {
  std::string name;
  lt::DualMorphism m;
};

inline lt::RootDatum gl(int n) { return lt::build_standard("GL", n); }

inline std::vector<NamedMorphism> test_morphisms() {
  using lt::IntMatrix;
  const auto gl1 = gl(1), gl2 = gl(2), gl3 = gl(3);
  const auto sl2 = lt::build_standard("SL", 2), pgl2 = lt::build_standard("PGL", 2);
  const auto t2 = lt::build_standard("Torus", 2);
  return {
      {"identity GL2", lt::identity_morphism(gl2)},
      {"identity SL2", lt::identity_morphism(sl2)},
      {"identity PGL2", lt::identity_morphism(pgl2)},
      {"diagonal GL1 -> GL2", lt::analyze(gl2, gl1, IntMatrix{{1, 1}})},
      {"Levi T in GL2", lt::analyze(gl2, t2, IntMatrix::identity(2))},
      {"power 2 on GL1", lt::analyze(gl1, gl1, IntMatrix{{2}})},
      {"power 3 on GL1", lt::analyze(gl1, gl1, IntMatrix{{3}})},
      {"det-dual GL1 -> GL2", lt::analyze(gl2, gl1, IntMatrix{{1, -1}})},
      {"SL2 -> PGL2 dual", lt::analyze(sl2, pgl2, IntMatrix{{2}})},
      {"SL2 in GL2 dual", lt::analyze(gl2, pgl2, IntMatrix{{1, -1}})},
      {"minus identity GL2", lt::analyze(gl2, gl2, IntMatrix{{-1, 0}, {0, -1}})},
      {"sym2 GL2 -> GL3", lt::analyze(gl3, gl2, IntMatrix{{2, 1, 0}, {0, 1, 2}})},
      {"diagonal GL1 -> GL3", lt::analyze(gl3, gl1, IntMatrix{{1, 1, 1}})},
      {"GL1xGL1 -> GL3", lt::analyze(gl3, t2, IntMatrix{{1, 1, 0}, {0, 0, 1}})},
      {"Levi GL1xGL2 in GL3", lt::analyze(gl3, lt::product(gl1, gl2), IntMatrix::identity(3))},
  };
}

/// Random gamma-vector with values in Q(zeta_12) and small rational coefficients.
inline lt::StableFunction random_stable(lt::ContextPtr ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> k(0, 11);
  lt::StableFunction f = lt::StableFunction::constant(ctx, lt::Cyclo(0));
  for (auto& g : f.gamma) g = lt::Cyclo(lt::Rational(c(rng), 1 + (c(rng) + 4) % 3)) * lt::Cyclo::root_of_unity(12, k(rng)) + lt::Cyclo(c(rng));
  return f;
}

/// Every point of (Q/Z)^r whose order is at most max_order.
inline std::vector<lt::QmodZVec> torsion_points(int rank, int64_t max_order) {
  std::set<lt::QmodZVec> seen;
  for (int64_t n = 1; n <= max_order; ++n) {
    std::vector<int64_t> a(rank, 0);
    while (true) {
      std::vector<lt::QmodZ> c;
      for (auto v : a) c.emplace_back(v, n);
      seen.insert(lt::QmodZVec(c));
      int i = rank - 1;
      while (i >= 0 && ++a[i] == n) a[i--] = 0;
      if (i < 0) break;
    }
  }
  return {seen.begin(), seen.end()};
}

/// Counterexamples to: w' in W'_chi' gives lifts in W_chi, and w' in W'^o_chi' gives lifts in W^o_chi,
/// chi the pullback of chi', over all chi' of order <= max_order.
inline int64_t stabilizer_lift_counterexamples(const lt::DualMorphism& m, int64_t max_order, int64_t* checked = nullptr) {
  int64_t bad = 0;
  const lt::IntMatrix At = m.A.transpose();
  for (const auto& chip : torsion_points(m.target.rank(), max_order)) {
    const auto sp = lt::tame_stabilizers(m.target, chip);
    const auto s = lt::tame_stabilizers(m.source, chip.transformed(At));
    for (int wp : sp.W_chi.members)
      for (int w : m.lift(wp)) {
        if (checked != nullptr) ++*checked;
        if (!s.W_chi.contains(w)) ++bad;
        if (sp.W_chi_circ.contains(wp) && !s.W_chi_circ.contains(w)) ++bad;
      }
  }
  return bad;
}

}  // namespace fixtures

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<lt::Cyclo> {
  static String convert(const lt::Cyclo& c) { return c.to_string().c_str(); }
};
template <>
struct StringMaker<lt::QmodZVec> {
  static String convert(const lt::QmodZVec& v) { return v.to_string().c_str(); }
};
}  // namespace doctest
#endif
