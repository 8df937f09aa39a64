#include "lt/matrixgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lt/error.hpp"
#include "lt/serialize.hpp"

namespace lt {

namespace {

struct Shape {
  const char* datum;
  // Exponents of the cocharacter coordinates in the two diagonal entries.
  std::vector<int64_t> first, second;
  bool projective = false;
  bool special = false;
  bool diagonal_only = false;
};

Shape shape_of(const std::string& name) {
  if (name == "GL2") return {"GL(2)", {1, 0}, {0, 1}};
  if (name == "SL2") return {"SL(2)", {1}, {-1}, false, true};
  if (name == "PGL2") return {"PGL(2)", {1}, {0}, true};
  if (name == "GL1") return {"GL(1)", {1}, {0}, false, false, true};
  if (name == "T2") return {"Torus(2)", {1, 0}, {0, 1}, false, false, true};
  fail(Errc::UnsupportedName, "matrix group '" + name + "' is not one of GL2, SL2, PGL2, GL1, T2");
}

int64_t mod(int64_t a, int64_t n) { return ((a % n) + n) % n; }

Cyclo root(const QmodZ& v) { return Cyclo::root_of_unity(static_cast<uint64_t>(v.den()), v.num()); }

}  // namespace

MatGroup::MatGroup(const std::string& name, int64_t q) : name_(name), q_(q) {
  const Shape sh = shape_of(name);
  require(q == 2 || q == 3 || q == 4 || q == 5 || q == 7, Errc::TooLarge, "q must be one of 2, 3, 4, 5, 7");
  const int64_t p = prime_of(q);
  int e = 0;
  for (int64_t t = q; t > 1; t /= p) ++e;
  K_ = &cached_field(p, 2 * e);
  rd_ = datum_from_name(sh.datum);
  ctx_ = GroupContext::split(rd_, q);
  const FiniteField& K = *K_;

  std::vector<FiniteField::Elt> fq{0};
  const auto g = K.subfield_generator(e);
  for (int64_t i = 0; i < q - 1; ++i) fq.push_back(K.pow(g, i));
  std::sort(fq.begin(), fq.end());

  for (auto a : fq)
    for (auto b : fq)
      for (auto c : fq)
        for (auto d : fq) {
          const Mat m{a, b, c, d};
          const auto det = K.sub(K.mul(a, d), K.mul(b, c));
          if (det == 0) continue;
          if (sh.special && det != 1) continue;
          if (sh.diagonal_only && (b != 0 || c != 0)) continue;
          if (name == "GL1" && d != 1) continue;
          if (sh.projective && normalize(m) != m) continue;
          elems_.push_back(m);
        }
  require(static_cast<int64_t>(elems_.size()) <= kMaxOrder, Errc::TooLarge, "group too large");
  for (std::size_t i = 0; i < elems_.size(); ++i) index_[code(elems_[i])] = static_cast<int>(i);
  identity_ = index({1, 0, 0, 1});

  inverse_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& [a, b, c, d] = elems_[i];
    const auto di = K.inv(K.sub(K.mul(a, d), K.mul(b, c)));
    inverse_[i] = index(normalize({K.mul(d, di), K.mul(K.neg(b), di), K.mul(K.neg(c), di), K.mul(a, di)}));
  }

  class_of_.assign(elems_.size(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (class_of_[i] >= 0) continue;
    const int c = static_cast<int>(reps_.size());
    reps_.push_back(static_cast<int>(i));
    int64_t size = 0;
    for (std::size_t h = 0; h < elems_.size(); ++h) {
      const int y = multiply(multiply(static_cast<int>(h), static_cast<int>(i)), inverse_[h]);
      if (class_of_[y] < 0) {
        class_of_[y] = c;
        ++size;
      }
    }
    sizes_.push_back(size);
  }
  for (std::size_t c = 0; c < reps_.size(); ++c) class_by_label_[class_label(static_cast<int>(c))] = static_cast<int>(c);

  // Tori: x in T^{F_w} goes to the element with eigenvalues zeta^{N p_j},
  // p = torsion_point(x), zeta the primitive element of K and N = q^2 - 1.
  const int64_t N = q * q - 1;
  const auto z = K.exp(1);
  const auto zq = K.exp(q);
  const Mat C{0, K.neg(K.mul(z, zq)), 1, K.add(z, zq)};
  std::vector<Mat> Cpow{{1, 0, 0, 1}};
  for (int64_t j = 1; j < N; ++j) Cpow.push_back(mul(Cpow.back(), C));

  const auto& W = rd_.weyl();
  torus_embed_.resize(W.order());
  torus_abstract_.resize(W.order());
  for (std::size_t w = 0; w < W.order(); ++w) {
    const auto T = ctx_->torus(static_cast<int>(w));
    for (int64_t x = 0; x < T->order(); ++x) {
      const QmodZVec pt = T->torsion_point(T->element(x));
      int64_t l1 = 0, l2 = 0;
      for (std::size_t j = 0; j < pt.size(); ++j) {
        require(N % pt[j].den() == 0, Errc::ValidationFailed, "torus point outside K");
        const int64_t v = pt[j].num() * (N / pt[j].den());
        l1 += sh.first[j] * v;
        l2 += sh.second[j] * v;
      }
      l1 = mod(l1, N);
      l2 = mod(l2, N);
      Mat m{};
      if (W.elements[w].is_identity()) {
        m = {K.exp(l1), 0, 0, K.exp(l2)};
      } else {
        int64_t j = -1;
        for (int64_t t = 0; t < N && j < 0; ++t) {
          const bool ok = sh.projective ? mod(t * (1 - q), N) == mod(l1 - l2, N)
                                        : (t == l1 && mod(t * q, N) == l2);
          if (ok) j = t;
        }
        require(j >= 0, Errc::ValidationFailed, "no concrete torus element for an abstract one");
        m = Cpow[j];
      }
      const int gi = index(normalize(m));
      require(gi >= 0, Errc::ValidationFailed, "torus element outside the group");
      require(torus_abstract_[w].emplace(gi, x).second, Errc::ValidationFailed, "torus embedding not injective");
      torus_embed_[w].push_back(gi);
    }
  }
}

int MatGroup::index(const Mat& m) const {
  auto it = index_.find(code(m));
  return it == index_.end() ? -1 : it->second;
}

int64_t MatGroup::code(const Mat& m) const {
  const int64_t Q = K_->order();
  return ((m[0] * Q + m[1]) * Q + m[2]) * Q + m[3];
}

MatGroup::Mat MatGroup::mul(const Mat& x, const Mat& y) const {
  const auto& K = *K_;
  return {K.add(K.mul(x[0], y[0]), K.mul(x[1], y[2])), K.add(K.mul(x[0], y[1]), K.mul(x[1], y[3])),
          K.add(K.mul(x[2], y[0]), K.mul(x[3], y[2])), K.add(K.mul(x[2], y[1]), K.mul(x[3], y[3]))};
}

MatGroup::Mat MatGroup::normalize(Mat m) const {
  if (name_ != "PGL2") return m;
  const auto s = K_->inv(m[0] != 0 ? m[0] : m[1]);
  for (auto& v : m) v = K_->mul(v, s);
  return m;
}

int MatGroup::multiply(int a, int b) const { return index(normalize(mul(elems_[a], elems_[b]))); }

int MatGroup::inverse(int a) const { return inverse_[a]; }

std::string MatGroup::matrix_string(const Mat& m) const {
  std::ostringstream os;
  os << "[[" << m[0] << ',' << m[1] << "],[" << m[2] << ',' << m[3] << "]]";
  return os.str();
}

std::string MatGroup::class_label(int c) const { return matrix_string(elems_[reps_[c]]); }

int MatGroup::class_by_label(const std::string& label) const {
  auto it = class_by_label_.find(label);
  return it == class_by_label_.end() ? -1 : it->second;
}

std::vector<int> MatGroup::central_elements() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < reps_.size(); ++c)
    if (sizes_[c] == 1) out.push_back(reps_[c]);
  return out;
}

int64_t MatGroup::torus_abstract(int w, int g) const {
  auto it = torus_abstract_[w].find(g);
  return it == torus_abstract_[w].end() ? -1 : it->second;
}

FiniteField::Elt MatGroup::trace(int i) const { return K_->add(elems_[i][0], elems_[i][3]); }

ClassFunction ClassFunction::zero(const MatGroup& g) { return {&g, std::vector<Cyclo>(g.num_classes(), Cyclo(0))}; }

ClassFunction ClassFunction::delta(const MatGroup& g) {
  auto f = zero(g);
  f.values[g.class_of(g.identity())] = Cyclo(1);
  return f;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require(a.group == b.group, Errc::ContextMismatch, "class functions on different groups");
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

ClassFunction operator*(const Cyclo& c, const ClassFunction& a) {
  ClassFunction out = a;
  for (auto& v : out.values) v *= c;
  return out;
}

Cyclo inner_cf(const ClassFunction& f, const ClassFunction& g) {
  require(f.group == g.group, Errc::ContextMismatch, "class functions on different groups");
  Cyclo s(0);
  for (std::size_t c = 0; c < f.values.size(); ++c) {
    if (f.values[c].is_zero() || g.values[c].is_zero()) continue;
    s += Cyclo(static_cast<long>(f.group->class_size(static_cast<int>(c)))) * f.values[c] * g.values[c].conj();
  }
  return s / Cyclo(static_cast<long>(f.group->order()));
}

ClassAlgebra::ClassAlgebra(const MatGroup& g) : g_(&g) {
  const std::size_t n = g.num_classes();
  a_.assign(n * n * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const int z = g.class_rep(static_cast<int>(k));
    for (std::size_t y = 0; y < g.order(); ++y) {
      const int x = g.multiply(z, g.inverse(static_cast<int>(y)));
      a_[(g.class_of(x) * n + g.class_of(static_cast<int>(y))) * n + k] += 1;
    }
  }
}

ClassFunction ClassAlgebra::convolve(const ClassFunction& f, const ClassFunction& g) const {
  require(f.group == g_ && g.group == g_, Errc::ContextMismatch, "class functions on a different group");
  const std::size_t n = g_->num_classes();
  auto out = ClassFunction::zero(*g_);
  for (std::size_t i = 0; i < n; ++i) {
    if (f.values[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.values[j].is_zero()) continue;
      const Cyclo fg = f.values[i] * g.values[j];
      for (std::size_t k = 0; k < n; ++k) {
        const int64_t a = a_[(i * n + j) * n + k];
        if (a != 0) out.values[k] += Cyclo(static_cast<long>(a)) * fg;
      }
    }
  }
  return out;
}

ClassFunction hc_induction(const MatGroup& g, const QmodZVec& theta) {
  const auto T = g.context()->torus(g.datum().weyl().identity);
  require(T->is_character(theta), Errc::InvalidArgument, "theta is not a character of the split torus");
  const auto& K = g.field();
  // theta on B^F through its diagonal part, as an exponent of zeta_e.
  const int64_t e = T->exponent();
  const int64_t ki = T->character_index(theta);
  std::vector<int64_t> on_b(g.order(), -1);
  int64_t b_order = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!g.in_borel(static_cast<int>(i))) continue;
    ++b_order;
    const auto& m = g.element(static_cast<int>(i));
    MatGroup::Mat d{m[0], 0, 0, m[3]};
    if (g.name() == "PGL2") {
      const auto s = K.inv(d[0]);
      d = {1, 0, 0, K.mul(d[3], s)};
    }
    const int64_t x = g.torus_abstract(g.datum().weyl().identity, g.index(d));
    require(x >= 0, Errc::ValidationFailed, "diagonal part outside the split torus");
    on_b[i] = T->pair_index(ki, x);
  }
  auto out = ClassFunction::zero(g);
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const int z = g.class_rep(static_cast<int>(c));
    std::vector<long> hist(e, 0);
    for (std::size_t h = 0; h < g.order(); ++h) {
      const int y = g.multiply(g.multiply(static_cast<int>(h), z), g.inverse(static_cast<int>(h)));
      if (on_b[y] >= 0) ++hist[on_b[y]];
    }
    CycloAccumulator acc(e);
    for (int64_t k = 0; k < e; ++k)
      if (hist[k] != 0) acc.add_root(e, k, hist[k]);
    out.values[c] = acc.result() / Cyclo(static_cast<long>(b_order));
  }
  return out;
}

ClassFunction trace_function(const MatGroup& g, int64_t psi_k) {
  require(g.name() == "GL2", Errc::UnsupportedGroup, "trace_function is defined for GL2");
  const auto& K = g.field();
  const int e = K.degree() / 2;
  require(psi_k % K.p() != 0, Errc::TrivialAdditiveCharacter, "psi must be nontrivial");
  auto out = ClassFunction::zero(g);
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    out.values[c] = additive_character(K.p(), psi_k, K.trace_to_prime(g.trace(g.class_rep(static_cast<int>(c))), e));
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("LT_DATA_DIR"); env != nullptr && *env != '\0') return env;
#ifdef LT_DEFAULT_DATA_DIR
  return LT_DEFAULT_DATA_DIR;
#else
  return "data/dl_tables";
#endif
}

const ClassFunction& DLTable::character(const PairKey& canonical) const {
  auto it = rows_.find(canonical);
  require(it != rows_.end(), Errc::MissingTable, "no character for pair " + g_->context()->pair_label(canonical));
  return it->second.values;
}

namespace {

int weyl_from_string(const WeylGroup& W, const std::string& s) {
  for (std::size_t i = 0; i < W.order(); ++i)
    if (W.elements[i].to_string() == s) return static_cast<int>(i);
  fail(Errc::Parse, "unknown Weyl element " + s);
}

void ingest(const MatGroup& g, const Json& j, std::map<PairKey, DLRow>& rows) {
  require(j.is_object() && j.contains("pairs"), Errc::Parse, "DL table must contain \"pairs\"");
  require(j.value("group", std::string()) == g.name(), Errc::ContextMismatch, "DL table is for another group");
  require(j.value("q", int64_t{0}) == g.q(), Errc::ContextMismatch, "DL table is for another q");
  const auto& ctx = *g.context();
  for (const auto& pr : j.at("pairs")) {
    const int w = weyl_from_string(ctx.weyl(), pr.at("w").get<std::string>());
    const PairKey key = ctx.canonical_pair({w, QmodZVec::parse(pr.at("theta").get<std::string>())});
    require(ctx.torus(w)->is_character(key.theta), Errc::Parse, "theta is not a character of the torus");
    DLRow row{ClassFunction::zero(g), true};
    std::vector<bool> seen(g.num_classes(), false);
    for (const auto& [label, v] : pr.at("values").items()) {
      const int c = g.class_by_label(label);
      require(c >= 0, Errc::Parse, "unknown class label " + label);
      row.values.values[c] = cyclo_from_json(v);
      seen[c] = true;
    }
    require(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }), Errc::Parse,
            "DL table row misses a class");
    rows.insert_or_assign(key, std::move(row));
  }
}

}  // namespace

DLTable DLTable::from_json(const MatGroup& g, const std::string& text) {
  DLTable t;
  t.g_ = &g;
  const auto& ctx = *g.context();
  const int id = ctx.weyl().identity;
  for (const auto& pr : ctx.pair_classes())
    if (pr.w == id) t.rows_[pr] = {hc_induction(g, pr.theta), false};
  if (!text.empty()) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::Parse, std::string("DL table: ") + e.what());
    }
    ingest(g, j, t.rows_);
  }
  for (const auto& pr : ctx.pair_classes())
    require(t.rows_.count(pr) == 1, Errc::MissingTable, "no DL character for " + ctx.pair_label(pr));
  t.validate();
  return t;
}

DLTable DLTable::load(const MatGroup& g, const std::string& data_dir) {
  bool needs_file = false;
  for (const auto& pr : g.context()->pair_classes()) needs_file |= pr.w != g.datum().weyl().identity;
  if (!needs_file) return from_json(g, "");
  const std::string path = data_dir + "/" + g.name() + "_q" + std::to_string(g.q()) + ".json";
  std::ifstream in(path);
  require(in.good(), Errc::MissingTable, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(g, ss.str());
}

void DLTable::validate() const {
  const auto& ctx = *g_->context();
  const int one = g_->class_of(g_->identity());
  for (const auto& [key, row] : rows_) {
    const std::string who = ctx.pair_label(key);
    require(row.values.values[one] == Cyclo(dl_degree(ctx, key.w)), Errc::ValidationFailed,
            "degree check failed for " + who);
    const auto T = ctx.torus(key.w);
    for (int z : g_->central_elements()) {
      const int64_t x = g_->torus_abstract(key.w, z);
      require(x >= 0, Errc::ValidationFailed, "central element outside a torus");
      require(row.values.values[g_->class_of(z)] == root(T->evaluate(key.theta, x)) * row.values.values[one],
              Errc::ValidationFailed, "central character check failed for " + who);
    }
    if (key.w == ctx.weyl().identity && row.ingested)
      require(row.values == hc_induction(*g_, key.theta), Errc::ValidationFailed,
              "split row disagrees with Harish-Chandra induction for " + who);
  }
  for (const auto& [a, ra] : rows_)
    for (const auto& [b, rb] : rows_)
      require(inner_cf(ra.values, rb.values) == Cyclo(static_cast<long>(ctx.transporter_count(a, b))),
              Errc::ValidationFailed, "Gram check failed for " + ctx.pair_label(a) + " and " + ctx.pair_label(b));
}

ClassFunction realize(const DLTable& table, const UniformFunction& u) {
  require(u.ctx->same_as(*table.group().context()), Errc::ContextMismatch, "uniform function on another group");
  auto out = ClassFunction::zero(table.group());
  for (const auto& [key, c] : u.coeffs) out = out + c * table.character(key);
  return out;
}

std::string dl_table_json(const MatGroup& g, const std::map<PairKey, ClassFunction>& rows) {
  const auto& ctx = *g.context();
  Json pairs = Json::array();
  for (const auto& [key, f] : rows) {
    Json values = Json::object();
    for (std::size_t c = 0; c < g.num_classes(); ++c)
      values[g.class_label(static_cast<int>(c))] = cyclo_to_json(f.values[c]);
    pairs.push_back({{"w", ctx.weyl().elements[key.w].to_string()}, {"theta", key.theta.to_string()}, {"values", values}});
  }
  return Json{{"group", g.name()}, {"q", g.q()}, {"pairs", pairs}}.dump(1) + "\n";
}

}  // namespace lt
