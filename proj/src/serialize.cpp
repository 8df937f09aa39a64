#include "lt/serialize.hpp"

#include "lt/error.hpp"

namespace lt {

namespace {

Integer parse_integer(const Json& j) {
  try {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<int64_t>()));
  } catch (const std::invalid_argument&) {
  }
  fail(Errc::Parse, "expected an integer, got " + j.dump());
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  require(j.is_string(), Errc::Parse, "expected a fraction string, got " + j.dump());
  try {
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(Errc::Parse, "bad fraction " + j.dump());
  }
}

std::vector<Vec> vec_list(const Json& j, const char* what) {
  require(j.is_array(), Errc::Parse, std::string(what) + " must be an array");
  std::vector<Vec> out;
  for (const auto& v : j) {
    require(v.is_array(), Errc::Parse, std::string(what) + " entries must be arrays");
    Vec r;
    for (const auto& x : v) r.push_back(to_int64(parse_integer(x)));
    out.push_back(std::move(r));
  }
  return out;
}

Json vec_list_json(const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (auto x : v) row.push_back(x);
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json cyclo_to_json(const Cyclo& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.get_str());
  return Json{{"level", c.level()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclo(parse_rational(j));
  require(j.is_object() && j.contains("level") && j.contains("coeffs"), Errc::Parse,
          "cyclotomic number must be {level, coeffs}");
  const auto level = j.at("level").get<uint64_t>();
  require(level >= 1, Errc::Parse, "level must be positive");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c));
  require(coeffs.size() == euler_phi(level), Errc::Parse, "coefficient count must be phi(level)");
  return Cyclo::from_canonical(level, coeffs);
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  require(j.is_array(), Errc::Parse, "matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, 0);
  const std::size_t cols = j.at(0).size();
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_array() && j[i].size() == cols, Errc::Parse, "matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_integer(j[i][c]);
  }
  return m;
}

Json datum_to_json(const RootDatum& rd) {
  return Json{{"name", rd.name()},
              {"rank", rd.rank()},
              {"roots", vec_list_json(rd.roots())},
              {"coroots", vec_list_json(rd.coroots())},
              {"simple", rd.simple()}};
}

RootDatum datum_from_json(const Json& j) {
  if (j.is_string()) return datum_from_name(j.get<std::string>());
  require(j.is_object(), Errc::Parse, "root datum must be a name or an object");
  try {
    const int rank = j.at("rank").get<int>();
    auto roots = vec_list(j.at("roots"), "roots");
    auto coroots = vec_list(j.at("coroots"), "coroots");
    auto simple = j.at("simple").get<std::vector<int>>();
    std::string name = j.value("name", std::string("custom"));
    return RootDatum(name, rank, roots, coroots, simple);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Parse, std::string("root datum: ") + e.what());
  }
}

DualMorphism morphism_from_json(const Json& j) {
  require(j.is_object() && j.contains("source") && j.contains("target") && j.contains("matrix"), Errc::Parse,
          "morphism must be {source, target, matrix}");
  return analyze(datum_from_json(j.at("source")), datum_from_json(j.at("target")), matrix_from_json(j.at("matrix")));
}

Json morphism_to_json(const DualMorphism& m) {
  return Json{{"source", datum_to_json(m.source)}, {"target", datum_to_json(m.target)}, {"matrix", matrix_to_json(m.A)}};
}

Json stable_to_json(const StableFunction& f) {
  Json classes = Json::object();
  const auto& cls = f.ctx->classes();
  for (std::size_t i = 0; i < cls.size(); ++i) classes[cls[i].label()] = cyclo_to_json(f.gamma[i]);
  return Json{{"group", f.ctx->datum().name()}, {"q", f.ctx->q()}, {"classes", classes}};
}

QmodZVec point_from_label(const std::string& label) {
  const auto pos = label.find('[');
  require(pos != std::string::npos, Errc::Parse, "bad class label '" + label + "'");
  return QmodZVec::parse(label.substr(pos));
}

StableFunction stable_from_json(const Json& j, ContextPtr ctx) {
  require(j.is_object() && j.contains("classes"), Errc::Parse, "gamma file must contain \"classes\"");
  if (j.contains("q"))
    require(j.at("q").get<int64_t>() == ctx->q(), Errc::ContextMismatch, "gamma file is for a different q");
  if (j.contains("group")) {
    const RootDatum rd = datum_from_json(j.at("group"));
    require(rd == ctx->datum(), Errc::ContextMismatch, "gamma file is for a different group");
  }
  StableFunction f = StableFunction::constant(ctx, Cyclo(0));
  std::vector<bool> seen(f.gamma.size(), false);
  for (const auto& [label, value] : j.at("classes").items()) {
    const int i = ctx->class_index(point_from_label(label));
    require(i >= 0, Errc::Parse, "unknown class label '" + label + "'");
    f.gamma[i] = cyclo_from_json(value);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    require(seen[i], Errc::Parse, "gamma file misses class " + ctx->classes()[i].label());
  return f;
}

Json uniform_to_json(const UniformFunction& u) {
  Json out = Json::object();
  for (const auto& [k, c] : u.coeffs) out[u.ctx->pair_label(k)] = cyclo_to_json(c);
  return out;
}

}  // namespace lt
