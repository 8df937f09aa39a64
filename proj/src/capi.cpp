#include "lt/lt.h"

#include <cstring>
#include <functional>
#include <random>
#include <thread>

#include "lt/error.hpp"
#include "lt/matrixgroup.hpp"
#include "lt/serialize.hpp"

struct lt_context {
  lt::ContextPtr ctx;
};
struct lt_morphism {
  lt::DualMorphism m;
};
struct lt_stable {
  lt::StableFunction f;
};

namespace {

using namespace lt;

thread_local std::string last_error;

lt_status run(const std::function<void()>& body) {
  last_error.clear();
  try {
    body();
    return LT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<lt_status>(static_cast<int>(e.code()) + 1);
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("Parse: ") + e.what();
    return LT_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return LT_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  require(out != nullptr, Errc::InvalidArgument, "null output pointer");
  *out = dup(j.dump(2) + "\n");
}

template <class T>
void need(const T* p, const char* what) {
  require(p != nullptr, Errc::InvalidArgument, std::string("null ") + what);
}

RootDatum parse_datum(const char* text) {
  need(text, "datum");
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '{') return datum_from_json(Json::parse(s));
  return datum_from_name(s);
}

Json subgroup_json(const WeylGroup& W, const Subgroup& H) {
  Json els = Json::array();
  for (int w : H.members) els.push_back(W.elements[w].to_string());
  return Json{{"order", H.order()}, {"elements", els}};
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

StableFunction random_gamma(ContextPtr ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> k(0, 11);
  auto f = StableFunction::constant(ctx, Cyclo(0));
  for (auto& g : f.gamma)
    g = Cyclo(Rational(c(rng), 1 + (c(rng) + 4) % 3)) * Cyclo::root_of_unity(12, k(rng)) + Cyclo(c(rng));
  return f;
}

std::string matgroup_name(const RootDatum& rd) {
  static const std::map<std::string, std::string> names{
      {"GL(2)", "GL2"}, {"SL(2)", "SL2"}, {"PGL(2)", "PGL2"}, {"GL(1)", "GL1"}, {"Torus(2)", "T2"}};
  auto it = names.find(rd.name());
  return it == names.end() ? std::string() : it->second;
}

Json diff_json(const GroupContext& ctx, const Comparison& c) {
  Json diffs = Json::array();
  for (const auto& d : c.diffs)
    diffs.push_back({{"pair", ctx.pair_label(d.key)}, {"left", cyclo_to_json(d.left)}, {"right", cyclo_to_json(d.right)}});
  return diffs;
}

}  // namespace

extern "C" {

const char* lt_last_error(void) { return last_error.c_str(); }

const char* lt_status_name(lt_status s) {
  if (s == LT_OK) return "Ok";
  if (s == LT_ERR_INTERNAL) return "Internal";
  if (s > LT_OK && s <= LT_ERR_TRIVIAL_ADDITIVE_CHARACTER) return errc_name(static_cast<Errc>(static_cast<int>(s) - 1));
  return "Unknown";
}

void lt_string_free(char* s) { std::free(s); }

lt_status lt_datum_report(const char* datum, char** json_out) {
  return run([&] {
    const RootDatum rd = parse_datum(datum);
    const auto& W = rd.weyl();
    Json pos = Json::array();
    for (std::size_t i = 0; i < rd.roots().size(); ++i)
      if (rd.is_positive(static_cast<int>(i))) pos.push_back(vec_json(rd.roots()[i]));
    Json j = datum_to_json(rd);
    j["positive_roots"] = pos;
    j["weyl_order"] = W.order();
    j["longest_length"] = W.longest_length();
    j["dual"] = dual(rd).name();
    emit(j, json_out);
  });
}

lt_status lt_context_new(const char* datum, int64_t q, lt_context** out) {
  return run([&] {
    need(out, "output");
    auto ctx = GroupContext::split(parse_datum(datum), q);
    *out = new lt_context{ctx};
  });
}

void lt_context_free(lt_context* ctx) { delete ctx; }

lt_status lt_context_classes(const lt_context* c, char** json_out) {
  return run([&] {
    need(c, "context");
    const auto& ctx = *c->ctx;
    Json classes = Json::array();
    for (const auto& g : ctx.classes()) classes.push_back(g.label());
    Json pairs = Json::array();
    for (const auto& pr : ctx.pair_classes())
      pairs.push_back({{"label", ctx.pair_label(pr)},
                       {"w", ctx.weyl().elements[pr.w].to_string()},
                       {"theta", pr.theta.to_string()},
                       {"class", kappa(ctx, pr.w, pr.theta).label()}});
    emit(Json{{"group", ctx.datum().name()}, {"q", ctx.q()}, {"classes", classes}, {"pairs", pairs}}, json_out);
  });
}

lt_status lt_context_tame(const lt_context* c, const char* chi, char** json_out) {
  return run([&] {
    need(c, "context");
    need(chi, "character");
    const auto& ctx = *c->ctx;
    const QmodZVec y = QmodZVec::parse(chi);
    require(static_cast<int>(y.size()) == ctx.datum().rank(), Errc::ShapeMismatch, "character has the wrong rank");
    for (const auto& v : y.coords())
      require(v.den() % ctx.frobenius().p != 0, Errc::InvalidArgument, "character order is not prime to p");
    const auto st = tame_stabilizers(ctx.datum(), y);
    const auto& W = ctx.weyl();
    emit(Json{{"chi", y.to_string()},
              {"class", GeomClass{ctx.canonical_point(y), 0}.label()},
              {"W_chi", subgroup_json(W, st.W_chi)},
              {"W_chi_circ", subgroup_json(W, st.W_chi_circ)},
              {"connected", st.W_chi == st.W_chi_circ}},
         json_out);
  });
}

lt_status lt_morphism_new(const char* json, lt_morphism** out) {
  return run([&] {
    need(json, "json");
    need(out, "output");
    *out = new lt_morphism{morphism_from_json(Json::parse(json))};
  });
}

void lt_morphism_free(lt_morphism* m) { delete m; }

lt_status lt_morphism_report(const lt_morphism* mp, char** json_out) {
  return run([&] {
    need(mp, "morphism");
    const auto& m = mp->m;
    const auto& W = m.source.weyl();
    const auto& Wp = m.target.weyl();
    Json levi = Json::array();
    for (int r : m.levi_roots) levi.push_back(vec_json(m.source.roots()[r]));
    Json lifts = Json::object();
    for (std::size_t w = 0; w < Wp.order(); ++w) {
      Json set = Json::array();
      for (int x : m.lifts[w]) set.push_back(W.elements[x].to_string());
      lifts[Wp.elements[w].to_string()] = set;
    }
    Json j = morphism_to_json(m);
    j["valid"] = m.valid;
    j["levi_roots"] = levi;
    j["W_L"] = subgroup_json(W, m.W_L);
    j["W_L_generated_order"] = m.W_L_generated.order();
    j["lifts"] = lifts;
    emit(j, json_out);
  });
}

lt_status lt_stable_from_json(const lt_context* c, const char* json, lt_stable** out) {
  return run([&] {
    need(c, "context");
    need(json, "json");
    need(out, "output");
    *out = new lt_stable{stable_from_json(Json::parse(json), c->ctx)};
  });
}

lt_status lt_stable_delta(const lt_context* c, lt_stable** out) {
  return run([&] {
    need(c, "context");
    need(out, "output");
    *out = new lt_stable{delta(c->ctx)};
  });
}

lt_status lt_stable_random(const lt_context* c, uint64_t seed, lt_stable** out) {
  return run([&] {
    need(c, "context");
    need(out, "output");
    std::mt19937_64 rng(seed);
    *out = new lt_stable{random_gamma(c->ctx, rng)};
  });
}

lt_status lt_stable_trace_psi(const lt_context* c, int64_t psi_k, lt_stable** out) {
  return run([&] {
    need(c, "context");
    need(out, "output");
    *out = new lt_stable{trace_psi(c->ctx, psi_k)};
  });
}

void lt_stable_free(lt_stable* f) { delete f; }

lt_status lt_stable_to_json(const lt_stable* f, char** json_out) {
  return run([&] {
    need(f, "stable function");
    emit(stable_to_json(f->f), json_out);
  });
}

lt_status lt_transfer(const lt_morphism* m, const lt_stable* f, const lt_context* target, lt_stable** out) {
  return run([&] {
    need(m, "morphism");
    need(f, "stable function");
    need(target, "target context");
    need(out, "output");
    *out = new lt_stable{transfer(m->m, f->f, target->ctx)};
  });
}

lt_status lt_assemble(const lt_morphism* m, const lt_stable* f, const lt_context* target, char** json_out) {
  return run([&] {
    need(m, "morphism");
    need(f, "stable function");
    need(target, "target context");
    const auto u = assemble(m->m, f->f, target->ctx);
    Json j{{"coefficients", uniform_to_json(u)}};
    try {
      j["degree"] = cyclo_to_json(degree(u));
    } catch (const Error& e) {
      if (e.code() != Errc::NoOrderFormula) throw;
      j["degree"] = nullptr;
    }
    emit(j, json_out);
  });
}

lt_status lt_verify_delta(const char* group, int64_t q, const char* data_dir, char** json_out, int* verified) {
  return run([&] {
    need(verified, "verified flag");
    const RootDatum rd = parse_datum(group);
    auto ctx = GroupContext::split(rd, q);
    const auto u = assemble(identity_morphism(rd), delta(ctx), ctx);
    const Cyclo deg = degree(u);
    Json j{{"group", rd.name()}, {"q", q}, {"coefficients", uniform_to_json(u)}, {"degree", cyclo_to_json(deg)}};
    bool ok = deg == Cyclo(1);
    j["degree_ok"] = ok;
    const std::string mg = matgroup_name(rd);
    if (!mg.empty()) {
      MatGroup g(mg, q);
      const auto table = DLTable::load(g, data_dir != nullptr ? std::string(data_dir) : default_data_dir());
      const auto f = realize(table, u);
      const auto d = ClassFunction::delta(g);
      Json bad = Json::array();
      for (std::size_t c = 0; c < g.num_classes(); ++c)
        if (!(f.values[c] == d.values[c]))
          bad.push_back({{"class", g.class_label(static_cast<int>(c))}, {"value", cyclo_to_json(f.values[c])}});
      j["realized"] = {{"checked", true}, {"group_order", g.order()}, {"classes", g.num_classes()},
                       {"equals_delta", bad.empty()}, {"mismatches", bad}};
      ok = ok && bad.empty();
    } else {
      j["realized"] = {{"checked", false}};
    }
    j["verified"] = ok;
    *verified = ok ? 1 : 0;
    emit(j, json_out);
  });
}

lt_status lt_verify_formula(const lt_morphism* mp, int64_t q, int trials, uint64_t seed, int jobs, char** json_out,
                            int* verified) {
  return run([&] {
    need(mp, "morphism");
    need(verified, "verified flag");
    require(trials >= 0, Errc::InvalidArgument, "trials must be non-negative");
    const auto& m = mp->m;
    auto src = GroupContext::split(m.source, q);
    auto tgt = GroupContext::split(m.target, q);
    const auto id = identity_morphism(m.target);
    // Seeds are drawn up front so the report does not depend on the job count.
    std::mt19937_64 seeder(seed);
    std::vector<uint64_t> seeds(trials);
    for (auto& s : seeds) s = seeder();
    std::vector<Comparison> results(trials);
    std::vector<std::string> errors(trials);
    auto work = [&](int start, int stride) {
      for (int t = start; t < trials; t += stride) {
        try {
          std::mt19937_64 rng(seeds[t]);
          const auto f = random_gamma(src, rng);
          results[t] = compare(assemble(m, f, tgt), assemble(id, transfer(m, f, tgt), tgt));
        } catch (const std::exception& e) {
          errors[t] = e.what();
        }
      }
    };
    const int n = std::max(1, std::min(jobs, std::max(trials, 1)));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(work, i, n);
    work(0, n);
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (!e.empty()) fail(Errc::InvalidArgument, e);
    Json failures = Json::array();
    for (int t = 0; t < trials; ++t)
      if (!results[t].equal) failures.push_back({{"trial", t}, {"diffs", diff_json(*tgt, results[t])}});
    *verified = failures.empty() ? 1 : 0;
    emit(Json{{"source", m.source.name()},
              {"target", m.target.name()},
              {"q", q},
              {"seed", seed},
              {"trials", trials},
              {"failures", failures},
              {"verified", failures.empty()}},
         json_out);
  });
}

lt_status lt_gauss(int64_t q, int64_t j, int64_t psi_k, char** json_out) {
  return run([&] {
    const int64_t p = prime_of(q);
    require(p != 0, Errc::InvalidArgument, "q must be a prime power");
    int s = 0;
    for (int64_t t = q; t > 1; t /= p) ++s;
    const auto& K = cached_field(p, s);
    const Cyclo g = gauss_sum(K, s, j, psi_k);
    const int64_t jj = ((j % (q - 1)) + q - 1) % (q - 1);
    emit(Json{{"q", q},
              {"j", j},
              {"psi", psi_k},
              {"value", cyclo_to_json(g)},
              {"text", g.to_string()},
              {"norm", cyclo_to_json(g * g.conj())},
              {"trivial_character", jj == 0}},
         json_out);
  });
}

}  // extern "C"
