#include "lt/finitefield.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "lt/error.hpp"

namespace lt {

namespace {

using Poly = std::vector<int64_t>;  // low degree first

// a * b mod (monic f) over F_p
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, int64_t p) {
  const std::size_t d = f.size() - 1;
  Poly r(2 * d, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = r.size(); k-- > d;) {
    const int64_t c = r[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - c * f[i]) % p + p) % p;
  }
  r.resize(d);
  return r;
}

Poly powmod_x(uint64_t e, const Poly& f, int64_t p) {
  const std::size_t d = f.size() - 1;
  Poly result(d, 0), base(d, 0);
  result[0] = 1;
  if (d == 1)
    base[0] = ((-f[0]) % p + p) % p;
  else
    base[1] = 1;
  while (e) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t r = 2; r * r <= n; ++r)
    if (n % r == 0) {
      out.push_back(r);
      while (n % r == 0) n /= r;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t r = 2; r * r <= n; ++r)
    if (n % r == 0) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(int64_t p, int degree) : p_(p), d_(degree) {
  require(is_prime(p), Errc::InvalidArgument, "characteristic must be prime");
  require(degree >= 1, Errc::InvalidArgument, "degree must be positive");
  order_ = 1;
  for (int i = 0; i < d_; ++i) {
    order_ *= p_;
    require(order_ <= kMaxOrder, Errc::TooLarge, "field order exceeds the table guard");
  }
  const uint64_t N = static_cast<uint64_t>(order_ - 1);
  const auto rs = prime_factors(N);
  // Lexicographically smallest monic primitive polynomial: scan the lower
  // coefficients in increasing base-p value.
  for (int64_t code = 0; code < order_; ++code) {
    Poly f(d_ + 1, 0);
    int64_t c = code;
    for (int i = 0; i < d_; ++i) {
      f[i] = c % p_;
      c /= p_;
    }
    f[d_] = 1;
    if (f[0] == 0) continue;
    if (!is_one(powmod_x(N, f, p_))) continue;
    bool primitive = true;
    for (uint64_t r : rs)
      if (is_one(powmod_x(N / r, f, p_))) {
        primitive = false;
        break;
      }
    if (primitive) {
      modulus_ = f;
      break;
    }
  }
  require(!modulus_.empty(), Errc::InvalidArgument, "no primitive polynomial found");

  exp_.resize(N);
  log_.assign(order_, -1);
  Poly cur(d_, 0);
  cur[0] = 1;
  Poly x(d_, 0);
  if (d_ == 1)
    x[0] = ((-modulus_[0]) % p_ + p_) % p_;
  else
    x[1] = 1;
  for (uint64_t i = 0; i < N; ++i) {
    int64_t code = 0;
    for (int k = d_; k-- > 0;) code = code * p_ + cur[k];
    exp_[i] = code;
    log_[code] = static_cast<int64_t>(i);
    cur = mulmod(cur, x, modulus_, p_);
  }
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  Elt r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elt FiniteField::neg(Elt a) const {
  Elt r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elt FiniteField::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (order_ - 1)];
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero in a finite field");
  return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

FiniteField::Elt FiniteField::pow(Elt a, int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const int64_t n = order_ - 1;
  const int64_t l = static_cast<int64_t>((static_cast<__int128>(log_[a]) * (((e % n) + n) % n)) % n);
  return exp_[l];
}

FiniteField::Elt FiniteField::exp(int64_t i) const {
  const int64_t n = order_ - 1;
  return exp_[((i % n) + n) % n];
}

int64_t FiniteField::log(Elt a) const {
  require(a > 0 && a < order_, Errc::InvalidArgument, "log of zero");
  return log_[a];
}

FiniteField::Elt FiniteField::frobenius(Elt a, int j) const {
  int64_t e = 1;
  for (int i = 0; i < j; ++i) e *= p_;
  return pow(a, e);
}

int64_t FiniteField::subfield_order(int s) const {
  require(has_subfield(s), Errc::InvalidArgument, "no subfield of that degree");
  int64_t r = 1;
  for (int i = 0; i < s; ++i) r *= p_;
  return r;
}

bool FiniteField::in_subfield(Elt a, int s) const { return frobenius(a, s) == a; }

FiniteField::Elt FiniteField::subfield_generator(int s) const {
  return exp((order_ - 1) / (subfield_order(s) - 1));
}

int64_t FiniteField::trace_to_prime(Elt a, int s) const {
  require(in_subfield(a, s), Errc::InvalidArgument, "element is not in the requested subfield");
  Elt t = 0;
  for (int j = 0; j < s; ++j) t = add(t, frobenius(a, j));
  require(t < p_, Errc::InvalidArgument, "trace did not land in the prime field");
  return t;
}

FiniteField::Elt FiniteField::norm(Elt a, int s) const {
  return pow(a, (order_ - 1) / (subfield_order(s) - 1));
}

const FiniteField& cached_field(int64_t p, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int64_t, int>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, degree}];
  if (!slot) slot = std::make_unique<FiniteField>(p, degree);
  return *slot;
}

Cyclo additive_character(int64_t p, int64_t k, int64_t a) {
  return Cyclo::root_of_unity(static_cast<uint64_t>(p), (k % p) * (a % p));
}

Cyclo gauss_sum(const FiniteField& K, int s, int64_t j, int64_t psi_k) {
  require(psi_k % K.p() != 0, Errc::TrivialAdditiveCharacter, "the additive character must be nontrivial");
  const int64_t n = K.subfield_order(s) - 1;
  const auto g = K.subfield_generator(s);
  CycloAccumulator acc(lcm_level(static_cast<uint64_t>(n), static_cast<uint64_t>(K.p())));
  FiniteField::Elt t = 1;
  for (int64_t i = 0; i < n; ++i) {
    const int64_t tr = K.trace_to_prime(t, s);
    // chi_j(t) psi_k(tr): exponent over lcm
    acc.add(Cyclo::root_of_unity(static_cast<uint64_t>(K.p()), psi_k * tr), static_cast<uint64_t>(n), j * i);
    t = K.mul(t, g);
  }
  return acc.result();
}

}  // namespace lt
