#include "lt/finitetorus.hpp"

#include <algorithm>
#include <numeric>

#include "lt/error.hpp"

namespace lt {

int64_t prime_of(int64_t q) {
  if (q < 2) return 0;
  int64_t p = 0;
  for (int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return q;
  int64_t r = q;
  while (r % p == 0) r /= p;
  return r == 1 ? p : 0;
}

FrobeniusData FrobeniusData::split(int64_t q, int rank) {
  const int64_t p = prime_of(q);
  require(p != 0, Errc::InvalidArgument, "q = " + std::to_string(q) + " is not a prime power");
  return FrobeniusData{q, p, SmallMatrix::identity(rank)};
}

FrobeniusData FrobeniusData::make(const RootDatum& rd, int64_t q, const SmallMatrix& sigma) {
  FrobeniusData fr = split(q, rd.rank());
  require(sigma.rows() == rd.rank() && sigma.cols() == rd.rank(), Errc::ShapeMismatch, "sigma must be rank x rank");
  for (const auto& c : rd.coroots())
    require(rd.coroot_index(sigma.apply(c)) >= 0, Errc::InvalidArgument, "sigma does not permute the coroots");
  SmallMatrix pw = sigma;
  int order = 1;
  while (!pw.is_identity()) {
    require(++order <= 64, Errc::InvalidArgument, "sigma does not have finite order");
    pw = pw * sigma;
  }
  require(abs(sigma.to_int_matrix().determinant()) == 1, Errc::InvalidArgument, "sigma is not invertible over Z");
  fr.sigma = sigma;
  return fr;
}

FiniteTorus::FiniteTorus(const RootDatum& rd, const FrobeniusData& fr, int w) : w_(w), q_(fr.q), p_(fr.p) {
  const auto& W = rd.weyl();
  require(w >= 0 && static_cast<std::size_t>(w) < W.order(), Errc::InvalidArgument, "Weyl index out of range");
  require(fr.sigma.rows() == rd.rank(), Errc::ShapeMismatch, "Frobenius data has the wrong rank");
  F_ = Integer(fr.q) * (W.elements[w] * fr.sigma).to_int_matrix();
  const IntMatrix M = F_ - IntMatrix::identity(F_.rows());
  require(M.rows() == 0 || M.determinant() != 0, Errc::InfiniteFixedPoints, "q w sigma - 1 is singular");
  auto snf = smith_normal_form(M);
  std::vector<int64_t> factors;
  for (std::size_t i = 0; i < M.rows(); ++i) factors.push_back(to_int64(snf.D(i, i)));
  U_ = snf.U;
  V_ = snf.V;
  group_ = FinAbGroup(std::move(factors), std::move(snf.U), std::move(snf.U_inv));
  exponent_ = group_.exponent();
}

FiniteTorus fixed_points(const RootDatum& rd, const FrobeniusData& fr, int w) { return FiniteTorus(rd, fr, w); }

int64_t FiniteTorus::add_index(int64_t a, int64_t b) const {
  return group_.index(group_.add(group_.element(a), group_.element(b)));
}

int64_t FiniteTorus::pair_index(int64_t k, int64_t x) const {
  const auto& d = group_.invariant_factors();
  int64_t acc = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    const int64_t a = k % d[i], b = x % d[i];
    k /= d[i];
    x /= d[i];
    acc = (acc + (a * b % d[i]) * (exponent_ / d[i])) % exponent_;
  }
  return acc;
}

int64_t FiniteTorus::neg_index(int64_t a) const { return group_.index(group_.negate(group_.element(a))); }

bool FiniteTorus::is_character(const QmodZVec& y) const {
  const IntMatrix M = F_.transpose() - IntMatrix::identity(F_.rows());
  return y.transformed(M).is_zero();
}

QmodZVec FiniteTorus::character(int64_t k_index) const {
  const Elt k = group_.element(k_index);
  const auto& d = group_.invariant_factors();
  std::vector<QmodZ> out(rank());
  for (int j = 0; j < rank(); ++j) {
    QmodZ acc;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const int64_t u = to_int64(U_(i, j)) % d[i];
      acc = acc + QmodZ(static_cast<int64_t>((static_cast<__int128>(u) * k[i]) % d[i]), d[i]);
    }
    out[j] = acc;
  }
  return QmodZVec(std::move(out), p_);
}

std::vector<QmodZVec> FiniteTorus::characters() const {
  std::vector<QmodZVec> out;
  out.reserve(order());
  for (int64_t i = 0; i < order(); ++i) out.push_back(character(i));
  return out;
}

FiniteTorus::Elt FiniteTorus::dual_coords(const QmodZVec& y) const {
  require(static_cast<int>(y.size()) == rank(), Errc::ShapeMismatch, "character has the wrong rank");
  require(is_character(y), Errc::InvalidArgument, "point " + y.to_string() + " is not a character of this torus");
  const QmodZVec z = y.transformed(group_.lift_matrix().transpose());
  const auto& d = group_.invariant_factors();
  Elt k(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    // z_i = k_i / d_i exactly, since y is a character
    require(d[i] % z[i].den() == 0, Errc::InvalidArgument, "character does not factor through the torus");
    k[i] = z[i].num() * (d[i] / z[i].den());
  }
  return k;
}

QmodZVec FiniteTorus::torsion_point(const Elt& x) const {
  const auto& d = group_.invariant_factors();
  std::vector<QmodZ> out(rank());
  for (int j = 0; j < rank(); ++j) {
    QmodZ acc;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const int64_t v = to_int64(V_(j, i) % d[i]);
      acc = acc + QmodZ(static_cast<int64_t>((static_cast<__int128>(v) * x[i]) % d[i]), d[i]);
    }
    out[j] = acc;
  }
  return QmodZVec(std::move(out));
}

QmodZ FiniteTorus::evaluate(const QmodZVec& y, const Elt& x) const {
  const IntVector lx = group_.lift(x);
  const int64_t l = y.order();
  Integer acc = 0;
  for (int j = 0; j < rank(); ++j) acc += lx[j] * (y[j].num() * (l / y[j].den()));
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(l));
  return QmodZ(r.get_si(), l);
}

// ---------------------------------------------------------------------------

namespace {

void check_function_order(const FiniteTorus& t) {
  require(t.order() <= FiniteTorus::kMaxFunctionOrder, Errc::GuardViolation,
          "torus of order " + std::to_string(t.order()) + " exceeds the function guard");
}

}  // namespace

TorusFunction TorusFunction::zero(std::shared_ptr<const FiniteTorus> t) {
  check_function_order(*t);
  const auto n = static_cast<std::size_t>(t->order());
  return TorusFunction{std::move(t), std::vector<Cyclo>(n, Cyclo(0))};
}

TorusFunction TorusFunction::delta(std::shared_ptr<const FiniteTorus> t) {
  TorusFunction f = zero(std::move(t));
  f.values[0] = Cyclo(1);
  return f;
}

TorusFunction TorusFunction::character(std::shared_ptr<const FiniteTorus> t, const QmodZVec& y) {
  TorusFunction f = zero(t);
  const int64_t k = t->character_index(y);
  const auto e = static_cast<uint64_t>(t->exponent());
  for (int64_t x = 0; x < t->order(); ++x) f.values[x] = Cyclo::root_of_unity(e, t->pair_index(k, x));
  return f;
}

TorusFunction convolve(const TorusFunction& f, const TorusFunction& g) {
  require(*f.torus == *g.torus, Errc::TorusMismatch, "convolution of functions on different tori");
  const auto& t = *f.torus;
  const int64_t n = t.order();
  TorusFunction out = TorusFunction::zero(f.torus);
  for (int64_t x = 0; x < n; ++x) {
    if (f.values[x].is_zero()) continue;
    for (int64_t h = 0; h < n; ++h) {
      if (g.values[h].is_zero()) continue;
      out.values[t.add_index(x, h)] += f.values[x] * g.values[h];
    }
  }
  return out;
}

Cyclo fourier_coefficient(const TorusFunction& f, const QmodZVec& y) {
  const auto& t = *f.torus;
  require(t.is_character(y), Errc::TorusMismatch, "character does not live on this torus");
  const int64_t k = t.character_index(y);
  const auto e = static_cast<uint64_t>(t.exponent());
  CycloAccumulator acc(e);
  for (int64_t x = 0; x < t.order(); ++x) {
    if (f.values[x].is_zero()) continue;
    acc.add(f.values[x], e, -t.pair_index(k, x));
  }
  return acc.result();
}

TorusFunction fourier_inverse(std::shared_ptr<const FiniteTorus> t, const std::vector<Cyclo>& coeffs) {
  require(static_cast<int64_t>(coeffs.size()) == t->order(), Errc::ShapeMismatch, "need one coefficient per character");
  TorusFunction f = TorusFunction::zero(t);
  const Cyclo scale(Rational(1, t->order()));
  const auto e = static_cast<uint64_t>(t->exponent());
  for (int64_t x = 0; x < t->order(); ++x) {
    CycloAccumulator acc(e);
    for (int64_t k = 0; k < t->order(); ++k) {
      if (coeffs[k].is_zero()) continue;
      acc.add(coeffs[k], e, t->pair_index(k, x));
    }
    f.values[x] = acc.result() * scale;
  }
  return f;
}

TameStabilizers tame_stabilizers(const RootDatum& rd, const QmodZVec& chi) {
  require(static_cast<int>(chi.size()) == rd.rank(), Errc::ShapeMismatch, "character has the wrong rank");
  const auto& W = rd.weyl();
  std::vector<int> stab;
  for (std::size_t w = 0; w < W.order(); ++w)
    if (chi.transformed(W.character_action(static_cast<int>(w)).to_int_matrix()) == chi)
      stab.push_back(static_cast<int>(w));
  std::vector<int> gens;
  for (std::size_t a = 0; a < rd.roots().size(); ++a) {
    if (!rd.is_positive(static_cast<int>(a))) continue;
    QmodZ s;
    for (int j = 0; j < rd.rank(); ++j) s = s + rd.coroots()[a][j] * chi[j];
    if (s.is_zero()) gens.push_back(W.find(rd.reflection(static_cast<int>(a))));
  }
  return TameStabilizers{Subgroup{stab}, generate_subgroup(W, gens)};
}

bool intertwines(const DualMorphism& m, const FiniteTorus& source, const FiniteTorus& target) {
  return m.A * source.frobenius() == target.frobenius() * m.A;
}

TorusFunction pushforward(const DualMorphism& m, const TorusFunction& f, std::shared_ptr<const FiniteTorus> target) {
  require(intertwines(m, *f.torus, *target), Errc::NotIntertwining, "A does not intertwine the two Frobenius maps");
  TorusFunction out = TorusFunction::zero(target);
  const auto& t = *f.torus;
  for (int64_t x = 0; x < t.order(); ++x) {
    if (f.values[x].is_zero()) continue;
    const int64_t y = target->index(target->project(m.A.apply(t.lift(t.element(x)))));
    out.values[y] += f.values[x];
  }
  return out;
}

QmodZVec pullback_char(const DualMorphism& m, const QmodZVec& theta_prime, const FiniteTorus& source,
                       const FiniteTorus& target) {
  require(intertwines(m, source, target), Errc::NotIntertwining, "A does not intertwine the two Frobenius maps");
  require(target.is_character(theta_prime), Errc::InvalidArgument, "not a character of the target torus");
  return theta_prime.transformed(m.A.transpose());
}

int eps_sign(const FrobeniusData& fr, const SmallMatrix& w) {
  auto nullity = [](const SmallMatrix& M) {
    const auto D = smith_normal_form((M - SmallMatrix::identity(M.rows())).to_int_matrix()).D;
    int rank = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) rank += D(i, i) != 0;
    return M.rows() - rank;
  };
  return (nullity(fr.sigma) - nullity(w * fr.sigma)) % 2 == 0 ? 1 : -1;
}

}  // namespace lt
