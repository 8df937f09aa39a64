// Writes the nonsplit-torus rows of the GL2/SL2/PGL2 Deligne-Lusztig tables
// from the classical character formula. With --check, compares against the
// files already on disk instead.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "lt/matrixgroup.hpp"

namespace {

using namespace lt;

int element_order(const MatGroup& g, int x) {
  int n = 1;
  for (int y = x; y != g.identity(); y = g.multiply(y, x)) ++n;
  return n;
}

int power(const MatGroup& g, int x, int64_t e) {
  int r = g.identity();
  for (int64_t i = 0; i < e; ++i) r = g.multiply(r, x);
  return r;
}

// Semisimple part of x.
int semisimple_part(const MatGroup& g, int x) {
  const int64_t p = g.field().p();
  int64_t n = element_order(g, x), pa = 1;
  while (n % p == 0) {
    n /= p;
    pa *= p;
  }
  // e = 0 mod pa, e = 1 mod n
  for (int64_t e = 0; e < pa * n; e += pa)
    if (e % n == 1 % n) return power(g, x, e);
  return x;
}

std::map<PairKey, ClassFunction> nonsplit_rows(const MatGroup& g) {
  const auto& ctx = *g.context();
  const int id = ctx.weyl().identity;
  std::map<PairKey, ClassFunction> rows;
  for (const auto& pr : ctx.pair_classes()) {
    if (pr.w == id) continue;
    const auto T = ctx.torus(pr.w);
    auto theta_at = [&](int elt) {
      const QmodZ v = T->evaluate(pr.theta, g.torus_abstract(pr.w, elt));
      return Cyclo::root_of_unity(v.den(), v.num());
    };
    // |W(T)^F| is the stabilizer of w under twisted conjugation.
    int64_t wt = 0;
    for (std::size_t x = 0; x < ctx.weyl().order(); ++x) wt += ctx.twisted_conjugate(static_cast<int>(x), pr.w) == pr.w;
    auto f = ClassFunction::zero(g);
    for (std::size_t c = 0; c < g.num_classes(); ++c) {
      const int x = g.class_rep(static_cast<int>(c));
      const int s = semisimple_part(g, x);
      if (g.class_size(g.class_of(s)) == 1) {
        const Cyclo q = s == x ? Cyclo(dl_degree(ctx, pr.w)) : Cyclo(1);
        f.values[c] = theta_at(s) * q;
        continue;
      }
      if (s != x) throw std::logic_error("noncentral semisimple part with a unipotent factor");
      Cyclo sum(0);
      int64_t count = 0;
      for (int64_t t = 0; t < T->order(); ++t) {
        const int elt = g.torus_element(pr.w, t);
        if (g.class_of(elt) != g.class_of(s)) continue;
        sum += theta_at(elt);
        ++count;
      }
      if (count > 0) f.values[c] = Cyclo(Rational(wt, count)) * sum;
    }
    rows[pr] = f;
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate nonsplit Deligne-Lusztig table files"};
  std::string out_dir = "data/dl_tables";
  bool check = false;
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--check", check, "compare with existing files and validate them");
  CLI11_PARSE(app, argc, argv);

  int bad = 0;
  for (const std::string name : {"GL2", "SL2", "PGL2"}) {
    for (int64_t q : {2, 3, 4, 5, 7}) {
      lt::MatGroup g(name, q);
      const std::string text = lt::dl_table_json(g, nonsplit_rows(g));
      const std::string path = out_dir + "/" + name + "_q" + std::to_string(q) + ".json";
      if (check) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        const bool same = ss.str() == text;
        bool valid = true;
        try {
          lt::DLTable::load(g, out_dir);
        } catch (const std::exception& e) {
          std::cerr << e.what() << '\n';
          valid = false;
        }
        std::cout << path << (same && valid ? " ok" : " MISMATCH") << '\n';
        bad += !(same && valid);
      } else {
        std::ofstream(path) << text;
        std::cout << "wrote " << path << '\n';
      }
    }
  }
  return bad == 0 ? 0 : 1;
}
