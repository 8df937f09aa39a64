#include "lt/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <regex>
#include <sstream>

#include "lt/error.hpp"

namespace lt {

SmallMatrix::SmallMatrix(int rows, int cols, std::vector<int64_t> a) : rows_(rows), cols_(cols), a_(std::move(a)) {
  require(a_.size() == static_cast<std::size_t>(rows) * cols, Errc::ShapeMismatch, "entry count does not match shape");
}

SmallMatrix SmallMatrix::identity(int n) {
  SmallMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

SmallMatrix SmallMatrix::from_int_matrix(const IntMatrix& m) {
  SmallMatrix s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = to_int64(m(i, j));
  return s;
}

SmallMatrix SmallMatrix::transpose() const {
  SmallMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<int64_t> SmallMatrix::apply(const std::vector<int64_t>& x) const {
  require(static_cast<int>(x.size()) == cols_, Errc::ShapeMismatch, "vector length does not match matrix width");
  std::vector<int64_t> y(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix SmallMatrix::to_int_matrix() const {
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

bool SmallMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
  require(a.cols_ == b.rows_, Errc::ShapeMismatch, "matrix product shape mismatch");
  SmallMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const int64_t v = a(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

SmallMatrix operator*(int64_t s, const SmallMatrix& a) {
  SmallMatrix c = a;
  for (auto& v : c.a_) v *= s;
  return c;
}

SmallMatrix operator-(const SmallMatrix& a, const SmallMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, Errc::ShapeMismatch, "matrix difference shape mismatch");
  SmallMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

std::string SmallMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

int64_t dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), Errc::ShapeMismatch, "pairing of vectors of different length");
  int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------

struct WeylCache {
  std::once_flag once;
  std::unique_ptr<WeylGroup> group;
};

namespace {

Vec negated(const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = -x;
  return r;
}

// Solves C c = 1 over Q for the Cartan matrix of the simple system and returns
// <alpha, h> for every root, with h = sum c_j alpha_j^vee.
std::vector<Rational> heights(const std::vector<Vec>& roots, const std::vector<Vec>& coroots,
                              const std::vector<int>& simple) {
  const std::size_t s = simple.size();
  std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) m[i][j] = dot(roots[simple[i]], coroots[simple[j]]);
    m[i][s] = 1;
  }
  for (std::size_t c = 0; c < s; ++c) {
    std::size_t piv = c;
    while (piv < s && m[piv][c] == 0) ++piv;
    require(piv < s, Errc::InvalidArgument, "simple roots are linearly dependent");
    std::swap(m[c], m[piv]);
    for (std::size_t r = 0; r < s; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= s; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> coef(s);
  for (std::size_t i = 0; i < s; ++i) coef[i] = m[i][s] / m[i][i];
  std::vector<Rational> h(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t j = 0; j < s; ++j) h[a] += coef[j] * dot(roots[a], coroots[simple[j]]);
  return h;
}

}  // namespace

RootDatum::RootDatum(std::string name, int rank, std::vector<Vec> roots, std::vector<Vec> coroots,
                     std::vector<int> simple)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      simple_(std::move(simple)),
      cache_(std::make_shared<WeylCache>()) {
  require(rank_ >= 0, Errc::InvalidArgument, "negative rank");
  require(roots_.size() == coroots_.size(), Errc::InvalidArgument, "roots and coroots must be in bijection");
  require(roots_.size() % 2 == 0, Errc::InvalidArgument, "root count must be even");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    require(static_cast<int>(roots_[i].size()) == rank_ && static_cast<int>(coroots_[i].size()) == rank_,
            Errc::ShapeMismatch, "root or coroot has wrong length");
    require(dot(roots_[i], coroots_[i]) == 2, Errc::InvalidArgument, "<alpha, alpha^vee> must be 2");
  }
  for (int s : simple_)
    require(s >= 0 && s < static_cast<int>(roots_.size()), Errc::InvalidArgument, "simple index out of range");
  // Every reflection permutes roots and coroots compatibly.
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (std::size_t j = 0; j < roots_.size(); ++j) {
      Vec a = roots_[j];
      const int64_t c = dot(a, coroots_[i]);
      for (int k = 0; k < rank_; ++k) a[k] -= c * roots_[i][k];
      Vec b = coroots_[j];
      const int64_t d = dot(roots_[i], b);
      for (int k = 0; k < rank_; ++k) b[k] -= d * coroots_[i][k];
      int ai = root_index(a);
      require(ai >= 0, Errc::InvalidArgument, "reflections do not permute the roots");
      require(coroots_[ai] == b, Errc::InvalidArgument, "reflections do not permute coroots compatibly");
    }
  }
  positive_.assign(roots_.size(), false);
  if (!roots_.empty()) {
    require(!simple_.empty(), Errc::InvalidArgument, "a simple system is required");
    auto h = heights(roots_, coroots_, simple_);
    int npos = 0;
    for (std::size_t a = 0; a < roots_.size(); ++a) {
      require(h[a] != 0, Errc::InvalidArgument, "simple system does not separate the roots");
      positive_[a] = h[a] > 0;
      npos += positive_[a];
    }
    require(npos * 2 == static_cast<int>(roots_.size()), Errc::InvalidArgument, "positive roots must be half of all");
    for (int s : simple_) require(positive_[s], Errc::InvalidArgument, "simple root is not positive");
  } else {
    require(simple_.empty(), Errc::InvalidArgument, "simple system of an empty root set must be empty");
  }
}

int RootDatum::num_positive_roots() const {
  return static_cast<int>(std::count(positive_.begin(), positive_.end(), true));
}

int RootDatum::root_index(const Vec& root) const {
  auto it = std::find(roots_.begin(), roots_.end(), root);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

int RootDatum::coroot_index(const Vec& coroot) const {
  auto it = std::find(coroots_.begin(), coroots_.end(), coroot);
  return it == coroots_.end() ? -1 : static_cast<int>(it - coroots_.begin());
}

SmallMatrix RootDatum::reflection(int i) const {
  SmallMatrix m = SmallMatrix::identity(rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) m(r, c) -= coroots_[i][r] * roots_[i][c];
  return m;
}

const WeylGroup& RootDatum::weyl() const {
  require(cache_ != nullptr, Errc::InvalidArgument, "uninitialized root datum");
  std::call_once(cache_->once, [this] {
    auto W = std::make_unique<WeylGroup>();
    std::vector<SmallMatrix> gens;
    for (int s : simple_) gens.push_back(reflection(s));

    // Breadth-first closure under right multiplication by simple reflections.
    std::vector<SmallMatrix> elems{SmallMatrix::identity(rank_)};
    std::vector<SmallMatrix> invs{SmallMatrix::identity(rank_)};
    std::map<std::vector<int64_t>, int> seen{{elems[0].data(), 0}};
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        SmallMatrix next = elems[cur] * g;
        if (seen.count(next.data())) continue;
        require(elems.size() < WeylGroup::kMaxOrder, Errc::GroupTooLarge, "Weyl group exceeds 10^4 elements");
        seen.emplace(next.data(), static_cast<int>(elems.size()));
        invs.push_back(g * invs[cur]);
        elems.push_back(std::move(next));
        queue.push_back(static_cast<int>(elems.size()) - 1);
      }
    }

    // Length = number of positive roots sent to negative roots (action on X*).
    std::vector<int> len(elems.size());
    for (std::size_t w = 0; w < elems.size(); ++w) {
      SmallMatrix act = invs[w].transpose();
      int count = 0;
      for (std::size_t a = 0; a < roots_.size(); ++a) {
        if (!positive_[a]) continue;
        int img = root_index(act.apply(roots_[a]));
        if (!positive_[img]) ++count;
      }
      len[w] = count;
    }

    std::vector<int> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (len[a] != len[b]) return len[a] < len[b];
      return elems[a] < elems[b];
    });
    for (int old : order) {
      W->index_of.emplace(elems[old].data(), static_cast<int>(W->elements.size()));
      W->elements.push_back(elems[old]);
      W->lengths.push_back(len[old]);
    }
    W->inverses.resize(W->elements.size());
    for (int old : order) {
      int nw = W->index_of.at(elems[old].data());
      W->inverses[nw] = W->index_of.at(invs[old].data());
    }
    W->identity = W->index_of.at(SmallMatrix::identity(rank_).data());
    for (const auto& g : gens) W->simple_reflections.push_back(W->index_of.at(g.data()));
    cache_->group = std::move(W);
  });
  return *cache_->group;
}

int WeylGroup::find(const SmallMatrix& m) const {
  auto it = index_of.find(m.data());
  return it == index_of.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  int r = find(elements[a] * elements[b]);
  require(r >= 0, Errc::InvalidArgument, "product left the Weyl group");
  return r;
}

int WeylGroup::longest_length() const { return *std::max_element(lengths.begin(), lengths.end()); }

bool Subgroup::contains(int w) const { return std::binary_search(members.begin(), members.end(), w); }

Subgroup generate_subgroup(const WeylGroup& W, const std::vector<int>& generators) {
  std::vector<bool> in(W.order(), false);
  std::vector<int> members{W.identity};
  in[W.identity] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int g : generators) {
      int p = W.multiply(members[i], g);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

// ---------------------------------------------------------------------------

namespace {

RootDatum gl(int n) {
  std::vector<Vec> roots, coroots;
  std::vector<int> simple;
  for (int sign : {1, -1})
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec v(n, 0);
        v[i] = sign;
        v[j] = -sign;
        if (sign == 1 && j == i + 1) simple.push_back(static_cast<int>(roots.size()));
        roots.push_back(v);
        coroots.push_back(v);
      }
  return RootDatum("GL(" + std::to_string(n) + ")", n, roots, coroots, simple);
}

// Simply connected type A_{n-1}: X_* spanned by simple coroots, X* by fundamental weights.
RootDatum sl(int n) {
  const int r = n - 1;
  std::vector<Vec> roots, coroots;
  std::vector<int> simple;
  for (int sign : {1, -1})
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec co(r, 0), ro(r, 0);
        for (int k = i; k < j; ++k) {
          co[k] = sign;
          for (int l = 0; l < r; ++l) ro[l] += sign * (k == l ? 2 : (std::abs(k - l) == 1 ? -1 : 0));
        }
        if (sign == 1 && j == i + 1) simple.push_back(static_cast<int>(roots.size()));
        roots.push_back(ro);
        coroots.push_back(co);
      }
  return RootDatum("SL(" + std::to_string(n) + ")", r, roots, coroots, simple);
}

RootDatum sp4() {
  std::vector<Vec> roots{{1, -1}, {0, 2}, {1, 1}, {2, 0}};
  std::vector<Vec> coroots{{1, -1}, {0, 1}, {1, 1}, {1, 0}};
  const std::size_t npos = roots.size();
  for (std::size_t i = 0; i < npos; ++i) {
    roots.push_back(negated(roots[i]));
    coroots.push_back(negated(coroots[i]));
  }
  return RootDatum("Sp(4)", 2, roots, coroots, {0, 1});
}

std::string dual_name(const std::string& name) {
  static const std::regex pat(R"(^(GL|SL|PGL|Torus)\((\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, pat)) {
    const std::string fam = m[1];
    if (fam == "SL") return "PGL(" + std::string(m[2]) + ")";
    if (fam == "PGL") return "SL(" + std::string(m[2]) + ")";
    return name;
  }
  if (name == "Sp(4)") return "SO(5)";
  if (name == "SO(5)") return "Sp(4)";
  if (name.rfind("dual(", 0) == 0 && name.back() == ')') return name.substr(5, name.size() - 6);
  return "dual(" + name + ")";
}

}  // namespace

RootDatum build_standard(const std::string& family, int n) {
  require(n >= 1, Errc::InvalidArgument, "rank parameter must be at least 1");
  if (family == "GL") return gl(n);
  if (family == "SL") {
    require(n >= 2, Errc::InvalidArgument, "SL(n) needs n >= 2");
    return sl(n);
  }
  if (family == "PGL") {
    require(n >= 2, Errc::InvalidArgument, "PGL(n) needs n >= 2");
    return dual(sl(n));
  }
  if (family == "Sp") {
    require(n == 2, Errc::UnsupportedName, "only Sp(4) (n = 2) is supported");
    return sp4();
  }
  if (family == "Torus") return RootDatum("Torus(" + std::to_string(n) + ")", n, {}, {}, {});
  fail(Errc::UnsupportedName, "unknown family '" + family + "'");
}

RootDatum datum_from_name(const std::string& name) {
  static const std::regex pat(R"(^\s*(GL|SL|PGL|Sp|SO|Torus|T)\s*\(?\s*(\d+)\s*\)?\s*$)");
  std::smatch m;
  require(std::regex_match(name, m, pat), Errc::UnsupportedName, "unknown group name '" + name + "'");
  std::string fam = m[1];
  int n = std::stoi(m[2]);
  if (fam == "T") fam = "Torus";
  if (fam == "Sp") {
    require(n == 4 || n == 2, Errc::UnsupportedName, "only Sp(4) is supported");
    return build_standard("Sp", 2);
  }
  if (fam == "SO") {
    require(n == 5, Errc::UnsupportedName, "only SO(5) is supported");
    return dual(build_standard("Sp", 2));
  }
  return build_standard(fam, n);
}

RootDatum dual(const RootDatum& rd) {
  return RootDatum(dual_name(rd.name()), rd.rank(), rd.coroots(), rd.roots(), rd.simple());
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  const int r = a.rank() + b.rank();
  std::vector<Vec> roots, coroots;
  std::vector<int> simple;
  auto embed = [r](const Vec& v, int offset) {
    Vec out(r, 0);
    std::copy(v.begin(), v.end(), out.begin() + offset);
    return out;
  };
  for (std::size_t i = 0; i < a.roots().size(); ++i) {
    roots.push_back(embed(a.roots()[i], 0));
    coroots.push_back(embed(a.coroots()[i], 0));
  }
  for (std::size_t i = 0; i < b.roots().size(); ++i) {
    roots.push_back(embed(b.roots()[i], a.rank()));
    coroots.push_back(embed(b.coroots()[i], a.rank()));
  }
  simple = a.simple();
  for (int s : b.simple()) simple.push_back(s + static_cast<int>(a.roots().size()));
  return RootDatum(a.name() + "x" + b.name(), r, roots, coroots, simple);
}

Levi levi_from_roots(const RootDatum& rd, const std::vector<int>& subset_in) {
  std::vector<int> subset = subset_in;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  auto in_subset = [&](int i) { return std::binary_search(subset.begin(), subset.end(), i); };
  for (int i : subset) {
    require(i >= 0 && i < static_cast<int>(rd.roots().size()), Errc::InvalidArgument, "root index out of range");
    require(in_subset(rd.root_index(negated(rd.roots()[i]))), Errc::NotClosed, "subset not closed under negation");
  }
  for (int i : subset)
    for (int j : subset) {
      Vec s = rd.roots()[j];
      const int64_t c = dot(s, rd.coroots()[i]);
      for (int k = 0; k < rd.rank(); ++k) s[k] -= c * rd.roots()[i][k];
      require(in_subset(rd.root_index(s)), Errc::NotClosed, "subset not closed under its reflections");
      Vec sum = rd.roots()[i];
      for (int k = 0; k < rd.rank(); ++k) sum[k] += rd.roots()[j][k];
      int si = rd.root_index(sum);
      require(si < 0 || in_subset(si), Errc::NotClosed, "subset not closed under root addition");
    }

  // Simple system of the subsystem: positive roots that are not sums of two positive subset roots.
  std::vector<Vec> roots, coroots;
  std::vector<int> simple;
  for (int i : subset) {
    roots.push_back(rd.roots()[i]);
    coroots.push_back(rd.coroots()[i]);
  }
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (!rd.is_positive(subset[a])) continue;
    bool decomposable = false;
    for (int b : subset)
      for (int c : subset) {
        if (!rd.is_positive(b) || !rd.is_positive(c)) continue;
        Vec sum = rd.roots()[b];
        for (int k = 0; k < rd.rank(); ++k) sum[k] += rd.roots()[c][k];
        if (sum == rd.roots()[subset[a]]) decomposable = true;
      }
    if (!decomposable) simple.push_back(static_cast<int>(a));
  }
  RootDatum levi("Levi(" + rd.name() + ")", rd.rank(), roots, coroots, simple);

  const WeylGroup& W = rd.weyl();
  std::vector<int> gens;
  for (int i : subset) gens.push_back(W.find(rd.reflection(i)));
  return Levi{std::move(levi), generate_subgroup(W, gens), subset};
}

}  // namespace lt
