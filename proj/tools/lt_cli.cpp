// lt: command-line front end over the C API.
// Exit codes: 0 success, 1 input or usage error, 2 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "lt/lt.h"

namespace {

using Json = nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(lt_status s) {
  if (s != LT_OK) throw InputError(lt_last_error());
}

std::string take(char* s) {
  std::string out(s);
  lt_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Context = std::unique_ptr<lt_context, Deleter<lt_context, lt_context_free>>;
using Morphism = std::unique_ptr<lt_morphism, Deleter<lt_morphism, lt_morphism_free>>;
using Stable = std::unique_ptr<lt_stable, Deleter<lt_stable, lt_stable_free>>;

Context make_context(const std::string& datum, int64_t q) {
  lt_context* c = nullptr;
  check(lt_context_new(datum.c_str(), q, &c));
  return Context(c);
}

Morphism make_morphism(const std::string& path) {
  lt_morphism* m = nullptr;
  check(lt_morphism_new(read_file(path).c_str(), &m));
  return Morphism(m);
}

std::string cyclo_text(const Json& c) {
  if (!c.is_object()) return c.dump();
  const auto& coeffs = c.at("coeffs");
  if (c.at("level") == 1) return coeffs.at(0).get<std::string>();
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto v = coeffs[i].get<std::string>();
    if (v == "0") continue;
    if (!out.empty()) out += " + ";
    out += "(" + v + ")";
    if (i > 0) out += "*z" + c.at("level").dump() + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

struct Report {
  Json body;
  std::string kind;  // classes, gamma or other
};

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return r.body.dump(2) + "\n";
  std::ostringstream os;
  if (format == "csv") {
    if (r.kind == "classes") {
      os << "class\n";
      for (const auto& l : r.body.at("classes")) os << csv_field(l.get<std::string>()) << '\n';
    } else if (r.kind == "gamma") {
      os << "class,gamma\n";
      for (const auto& [k, v] : r.body.at("gamma").at("classes").items())
        os << csv_field(k) << ',' << csv_field(cyclo_text(v)) << '\n';
    } else {
      throw InputError("csv output is only available for classes and transfer");
    }
    return os.str();
  }
  if (r.kind == "classes") {
    for (const auto& l : r.body.at("classes")) os << l.get<std::string>() << '\n';
    return os.str();
  }
  for (const auto& [k, v] : r.body.items()) {
    if (v.is_object() && v.contains("level")) {
      os << k << ": " << cyclo_text(v) << '\n';
    } else if (v.is_object() && !v.empty() && v.begin()->is_object() && v.begin()->contains("level")) {
      os << k << ":\n";
      for (const auto& [kk, vv] : v.items()) os << "  " << kk << ": " << cyclo_text(vv) << '\n';
    } else if (v.is_primitive()) {
      os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
      os << k << ": " << v.dump() << '\n';
    }
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfer maps between stable functions on finite reductive groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json", output;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", output, "write the report to a file");

  std::string group, file, chi, gamma_file, morphism_file, data_dir;
  int64_t q = 0, j = 1, psi = 1;
  int trials = 20, jobs = 1;
  uint64_t seed = 0;
  bool use_delta = false;

  auto* rootdatum = app.add_subcommand("rootdatum", "describe a root datum");
  auto* rg = rootdatum->add_option("--group", group, "name such as GL(2)");
  rootdatum->add_option("--file", file, "JSON root datum")->excludes(rg);

  auto* morphism = app.add_subcommand("morphism", "analyze a dual morphism");
  morphism->add_option("--file", file, "JSON {source, target, matrix}")->required();

  auto* classes = app.add_subcommand("classes", "list geometric and rational classes");
  classes->add_option("--group", group)->required();
  classes->add_option("--q", q)->required();

  auto* tame = app.add_subcommand("tame", "stabilizers of a tame character");
  tame->add_option("--group", group)->required();
  tame->add_option("--q", q)->required();
  tame->add_option("--chi", chi, "character such as [1/2,0]")->required();

  auto* transfer = app.add_subcommand("transfer", "transfer a gamma-function along a morphism");
  transfer->add_option("--morphism", morphism_file)->required();
  transfer->add_option("--q", q)->required();
  auto* tg = transfer->add_option("--gamma", gamma_file, "JSON gamma-values on the source");
  transfer->add_flag("--delta", use_delta, "use the delta function")->excludes(tg);

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* vdelta = verify->add_subcommand("delta", "delta function formula");
  vdelta->add_option("--group", group)->required();
  vdelta->add_option("--q", q)->required();
  vdelta->add_option("--data-dir", data_dir, "directory of DL table files");
  auto* vformula = verify->add_subcommand("formula", "transfer formula against gamma pullback");
  vformula->add_option("--morphism", morphism_file)->required();
  vformula->add_option("--q", q)->required();
  vformula->add_option("--seed", seed)->required();
  vformula->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  vformula->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* gauss = app.add_subcommand("gauss", "Gauss sum over F_q");
  gauss->add_option("--q", q)->required();
  gauss->add_option("--j", j, "multiplicative character exponent");
  gauss->add_option("--psi", psi, "additive character index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    Report r;
    bool mismatch = false;
    char* out = nullptr;
    if (*rootdatum) {
      if (group.empty() && file.empty()) throw InputError("rootdatum needs --group or --file");
      const std::string d = file.empty() ? group : read_file(file);
      check(lt_datum_report(d.c_str(), &out));
      r.body = Json::parse(take(out));
    } else if (*morphism) {
      auto m = make_morphism(file);
      check(lt_morphism_report(m.get(), &out));
      r.body = Json::parse(take(out));
    } else if (*classes) {
      auto c = make_context(group, q);
      check(lt_context_classes(c.get(), &out));
      r.body = Json::parse(take(out));
      r.kind = "classes";
    } else if (*tame) {
      auto c = make_context(group, q);
      check(lt_context_tame(c.get(), chi.c_str(), &out));
      r.body = Json::parse(take(out));
    } else if (*transfer) {
      if (gamma_file.empty() && !use_delta) throw InputError("transfer needs --gamma or --delta");
      const Json mj = Json::parse(read_file(morphism_file));
      auto m = make_morphism(morphism_file);
      auto datum = [](const Json& d) { return d.is_string() ? d.get<std::string>() : d.dump(); };
      auto src = make_context(datum(mj.at("source")), q);
      auto tgt = make_context(datum(mj.at("target")), q);
      lt_stable* f = nullptr;
      if (use_delta)
        check(lt_stable_delta(src.get(), &f));
      else
        check(lt_stable_from_json(src.get(), read_file(gamma_file).c_str(), &f));
      Stable fs(f);
      lt_stable* g = nullptr;
      check(lt_transfer(m.get(), fs.get(), tgt.get(), &g));
      Stable gs(g);
      check(lt_stable_to_json(gs.get(), &out));
      r.body["gamma"] = Json::parse(take(out));
      check(lt_assemble(m.get(), fs.get(), tgt.get(), &out));
      r.body["uniform"] = Json::parse(take(out));
      r.kind = "gamma";
    } else if (*vdelta) {
      int ok = 0;
      check(lt_verify_delta(group.c_str(), q, data_dir.empty() ? nullptr : data_dir.c_str(), &out, &ok));
      r.body = Json::parse(take(out));
      mismatch = ok == 0;
    } else if (*vformula) {
      int ok = 0;
      auto m = make_morphism(morphism_file);
      check(lt_verify_formula(m.get(), q, trials, seed, jobs, &out, &ok));
      r.body = Json::parse(take(out));
      mismatch = ok == 0;
    } else if (*gauss) {
      check(lt_gauss(q, j, psi, &out));
      r.body = Json::parse(take(out));
    }
    const std::string text = render(r, format);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(output);
      if (!f) throw InputError("cannot write " + output);
      f << text;
    }
    return mismatch ? 2 : 0;
  } catch (const InputError& e) {
    std::cerr << "lt: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "lt: bad JSON input: " << e.what() << '\n';
    return 1;
  }
}
