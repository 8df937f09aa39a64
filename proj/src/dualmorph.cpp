#include "lt/dualmorph.hpp"

#include <algorithm>

#include "lt/error.hpp"

namespace lt {

const std::vector<int>& DualMorphism::lift(int w_prime) const {
  require(w_prime >= 0 && static_cast<std::size_t>(w_prime) < lifts.size(), Errc::InvalidArgument,
          "Weyl element index out of range");
  require(!lifts[w_prime].empty(), Errc::NoLift,
          "no w with A w = w' A for w' = " + target.weyl().elements[w_prime].to_string());
  return lifts[w_prime];
}

int DualMorphism::lift_representative(int w_prime) const {
  const auto& set = lift(w_prime);
  const auto& W = source.weyl();
  return *std::min_element(set.begin(), set.end(),
                           [&](int x, int y) { return W.elements[x] < W.elements[y]; });
}

DualMorphism analyze(const RootDatum& source, const RootDatum& target, const IntMatrix& A) {
  require(A.rows() == static_cast<std::size_t>(target.rank()) && A.cols() == static_cast<std::size_t>(source.rank()),
          Errc::ShapeMismatch, "matrix must have shape rank(G') x rank(G)");
  DualMorphism m{source, target, A, SmallMatrix::from_int_matrix(A), {}, {}, {}, false, {}};

  for (std::size_t i = 0; i < source.roots().size(); ++i) {
    const auto img = m.a.apply(source.coroots()[i]);
    if (std::all_of(img.begin(), img.end(), [](int64_t v) { return v == 0; }))
      m.levi_roots.push_back(static_cast<int>(i));
  }

  const auto& W = source.weyl();
  const auto& Wp = target.weyl();
  std::vector<int> stab;
  for (std::size_t w = 0; w < W.order(); ++w)
    if (m.a * W.elements[w] == m.a) stab.push_back(static_cast<int>(w));
  m.W_L = Subgroup{stab};

  std::vector<int> gens;
  for (int i : m.levi_roots) gens.push_back(W.find(source.reflection(i)));
  m.W_L_generated = generate_subgroup(W, gens);

  m.lifts.assign(Wp.order(), {});
  m.valid = true;
  for (std::size_t wp = 0; wp < Wp.order(); ++wp) {
    const SmallMatrix rhs = Wp.elements[wp] * m.a;
    for (std::size_t w = 0; w < W.order(); ++w)
      if (m.a * W.elements[w] == rhs) m.lifts[wp].push_back(static_cast<int>(w));
    if (m.lifts[wp].empty()) m.valid = false;
  }
  return m;
}

DualMorphism identity_morphism(const RootDatum& rd) {
  return analyze(rd, rd, IntMatrix::identity(static_cast<std::size_t>(rd.rank())));
}

DualMorphism compose(const DualMorphism& outer, const DualMorphism& inner) {
  require(inner.source == outer.target, Errc::DatumMismatch,
          "inner source datum " + inner.source.name() + " differs from outer target " + outer.target.name());
  return analyze(outer.source, inner.target, inner.A * outer.A);
}

DualMorphism from_weights(int n, const RootDatum& target, const std::vector<Vec>& weights) {
  require(static_cast<int>(weights.size()) == n, Errc::WeightCountMismatch,
          "expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  IntMatrix A(static_cast<std::size_t>(target.rank()), static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    require(static_cast<int>(weights[j].size()) == target.rank(), Errc::ShapeMismatch,
            "weight length must equal rank(G')");
    for (int i = 0; i < target.rank(); ++i) A(i, j) = static_cast<long>(weights[j][i]);
  }
  return analyze(build_standard("GL", n), target, A);
}

bool normalizes(const WeylGroup& W, const Subgroup& H, int x) {
  for (int h : H.members)
    if (!H.contains(W.multiply(W.multiply(x, h), W.inverses[x]))) return false;
  return true;
}

bool is_single_normalizing_coset(const WeylGroup& W, const Subgroup& W_L, const std::vector<int>& set) {
  if (set.empty() || set.size() != W_L.order()) return false;
  const int w0 = set.front();
  std::vector<int> coset;
  for (int h : W_L.members) coset.push_back(W.multiply(w0, h));
  std::sort(coset.begin(), coset.end());
  std::vector<int> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  if (coset != sorted) return false;
  return std::all_of(set.begin(), set.end(), [&](int w) { return normalizes(W, W_L, w); });
}

}  // namespace lt
