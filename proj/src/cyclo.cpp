#include "lt/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lt/error.hpp"

namespace lt {

namespace {

int64_t mod_pos(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> d;
  for (uint64_t i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int64_t> compute_cyclotomic(uint64_t N) {
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<int64_t> poly(N + 1, 0);
  poly[0] = -1;
  poly[N] = 1;
  for (uint64_t d : divisors(N)) {
    if (d == N) continue;
    const auto& phi = cyclotomic_polynomial(d);
    const std::size_t dp = phi.size() - 1;
    std::vector<int64_t> quot(poly.size() - dp, 0);
    for (std::size_t k = poly.size(); k-- > dp;) {
      int64_t c = poly[k];
      if (c == 0) continue;
      quot[k - dp] = c;
      for (std::size_t i = 0; i <= dp; ++i) poly[k - dp + i] -= c * phi[i];
    }
    poly = std::move(quot);
  }
  return poly;
}

}  // namespace

uint64_t lcm_level(uint64_t a, uint64_t b) {
  uint64_t l = std::lcm(a, b);
  require(l <= Cyclo::kMaxLevel, Errc::LevelTooLarge, "cyclotomic level " + std::to_string(l) + " exceeds 2^24");
  return l;
}

const std::vector<int64_t>& cyclotomic_polynomial(uint64_t N) {
  require(N >= 1, Errc::InvalidArgument, "cyclotomic level must be positive");
  static std::mutex mu;
  static std::map<uint64_t, std::unique_ptr<const std::vector<int64_t>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;
  }
  std::vector<int64_t> poly = N == 1 ? std::vector<int64_t>{-1, 1} : compute_cyclotomic(N);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(N, std::make_unique<const std::vector<int64_t>>(std::move(poly)));
  return *it->second;
}

uint64_t euler_phi(uint64_t N) { return cyclotomic_polynomial(N).size() - 1; }

// ---------------------------------------------------------------------------

Cyclo::Cyclo(const Rational& r) : num_{r.get_num()}, den_(r.get_den()) {}

Cyclo::Cyclo(uint64_t level, std::vector<Integer> num, Integer den)
    : level_(level), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Cyclo::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& n : num_) n = -n;
  }
  Integer g = den_;
  for (const auto& n : num_) {
    if (g == 1) break;
    if (n != 0) g = gcd(g, n);
  }
  if (g != 1) {
    for (auto& n : num_)
      if (n != 0) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  bool rational = true;
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    level_ = 1;
    num_.resize(1);
    if (num_[0] == 0) den_ = 1;
  }
}

Cyclo Cyclo::reduce_power_array(uint64_t N, std::vector<Integer> arr, Integer den) {
  const auto& phi = cyclotomic_polynomial(N);
  const std::size_t dp = phi.size() - 1;
  for (std::size_t k = arr.size(); k-- > dp;) {
    if (arr[k] == 0) continue;
    Integer c = arr[k];
    for (std::size_t i = 0; i <= dp; ++i)
      if (phi[i] != 0) arr[k - dp + i] -= c * phi[i];
  }
  arr.resize(dp);
  return Cyclo(N, std::move(arr), std::move(den));
}

Cyclo Cyclo::root_of_unity(uint64_t N, int64_t k) {
  require(N >= 1 && N <= kMaxLevel, Errc::InvalidArgument, "root of unity level out of range");
  std::vector<Integer> arr(N);
  arr[mod_pos(k, static_cast<int64_t>(N))] = 1;
  return reduce_power_array(N, std::move(arr), 1);
}

Cyclo Cyclo::from_power_array(uint64_t N, std::vector<Rational> coeffs) {
  require(coeffs.size() == N, Errc::ShapeMismatch, "power array length must equal the level");
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  std::vector<Integer> arr(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (coeffs[i] == 0) continue;
    arr[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  }
  return reduce_power_array(N, std::move(arr), std::move(den));
}

Cyclo Cyclo::from_canonical(uint64_t N, const std::vector<Rational>& coeffs) {
  require(coeffs.size() == euler_phi(N), Errc::ShapeMismatch,
          "canonical coefficient count must equal phi(level)");
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  std::vector<Integer> num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return Cyclo(N, std::move(num), std::move(den));
}

std::vector<Rational> Cyclo::coeffs() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = Rational(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

Rational Cyclo::coefficient(std::size_t i) const {
  if (i >= num_.size()) return 0;
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

bool Cyclo::is_zero() const { return level_ == 1 && num_[0] == 0; }
bool Cyclo::is_rational() const { return level_ == 1; }

Rational Cyclo::rational_value() const {
  require(is_rational(), Errc::InvalidArgument, "value is not rational");
  return coefficient(0);
}

Cyclo Cyclo::lift_to_level(uint64_t M) const {
  require(M >= 1 && M % level_ == 0, Errc::IncompatibleLevel,
          "level " + std::to_string(level_) + " does not divide " + std::to_string(M));
  require(M <= kMaxLevel, Errc::LevelTooLarge, "level exceeds 2^24");
  if (M == level_) return *this;
  const uint64_t step = M / level_;
  std::vector<Integer> arr(M);
  for (std::size_t i = 0; i < num_.size(); ++i) arr[i * step] = num_[i];
  // rationals collapse back to level 1
  return reduce_power_array(M, std::move(arr), den_);
}

Cyclo Cyclo::galois(int64_t k) const {
  if (level_ == 1) return *this;
  const auto N = static_cast<int64_t>(level_);
  require(std::gcd(mod_pos(k, N), N) == 1, Errc::InvalidArgument, "Galois exponent must be a unit mod N");
  std::vector<Integer> arr(level_);
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) arr[mod_pos(static_cast<int64_t>(i) * k, N)] += num_[i];
  return reduce_power_array(level_, std::move(arr), den_);
}

Cyclo Cyclo::times_root(uint64_t N, int64_t k) const {
  const uint64_t L = lcm_level(level_, N);
  const uint64_t step = L / level_;
  const int64_t shift = mod_pos(k * static_cast<int64_t>(L / N), static_cast<int64_t>(L));
  std::vector<Integer> arr(L);
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) arr[(i * step + shift) % L] += num_[i];
  return reduce_power_array(L, std::move(arr), den_);
}

Cyclo Cyclo::inverse() const {
  require(!is_zero(), Errc::DivisionByZero, "division by zero");
  if (level_ == 1) return Cyclo(Rational(den_, num_[0]));
  const auto N = static_cast<int64_t>(level_);
  Cyclo others(1);
  for (int64_t k = 2; k < N; ++k)
    if (std::gcd(k, N) == 1) others *= galois(k);
  Cyclo norm = *this * others;
  return others * Cyclo(Rational(1) / norm.rational_value());
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& n : r.num_) n = -n;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const uint64_t L = lcm_level(level_, o.level_);
  Cyclo a = lift_to_level(L);
  Cyclo b = o.lift_to_level(L);
  // lifting may collapse to level 1 for rationals; pad both to L
  auto padded = [L](const Cyclo& c) {
    if (c.level_ == L) return c.num_;
    std::vector<Integer> v(euler_phi(L));
    v[0] = c.num_[0];
    return v;
  };
  std::vector<Integer> an = padded(a), bn = padded(b);
  Integer den = lcm(a.den_, b.den_);
  Integer fa = den / a.den_, fb = den / b.den_;
  for (std::size_t i = 0; i < an.size(); ++i) an[i] = an[i] * fa + bn[i] * fb;
  *this = Cyclo(L, std::move(an), std::move(den));
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (is_zero() || o.is_zero()) return *this = Cyclo();
  if (o.level_ == 1) {
    for (auto& n : num_) n *= o.num_[0];
    den_ *= o.den_;
    normalize();
    return *this;
  }
  if (level_ == 1) {
    Cyclo r = o;
    for (auto& n : r.num_) n *= num_[0];
    r.den_ *= den_;
    r.normalize();
    return *this = r;
  }
  const uint64_t L = lcm_level(level_, o.level_);
  Cyclo a = lift_to_level(L);
  Cyclo b = o.lift_to_level(L);
  std::vector<Integer> prod(a.num_.size() + b.num_.size() - 1);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
  }
  *this = reduce_power_array(L, std::move(prod), a.den_ * b.den_);
  return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.level_ == b.level_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.is_rational() != b.is_rational()) {
    // both are normalized, so a rational value always sits at level 1
    return false;
  }
  const uint64_t L = lcm_level(a.level_, b.level_);
  Cyclo la = a.lift_to_level(L), lb = b.lift_to_level(L);
  return la.den_ == lb.den_ && la.num_ == lb.num_;
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c(num_[i], den_);
    c.canonicalize();
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational ac = abs(c);
    if (i == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << "z" << level_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

CycloAccumulator::CycloAccumulator(uint64_t level) : level_(level), slots_(level) {
  require(level >= 1 && level <= Cyclo::kMaxLevel, Errc::InvalidArgument, "accumulator level out of range");
}

void CycloAccumulator::ensure_level(uint64_t N) {
  if (level_ % N == 0) return;
  const uint64_t L = lcm_level(level_, N);
  std::vector<Rational> grown(L);
  const uint64_t step = L / level_;
  for (uint64_t i = 0; i < level_; ++i) grown[i * step] = std::move(slots_[i]);
  slots_ = std::move(grown);
  level_ = L;
}

void CycloAccumulator::add(const Cyclo& c) { add(c, 1, 0); }

void CycloAccumulator::add(const Cyclo& c, uint64_t N, int64_t k) {
  if (c.is_zero()) return;
  ensure_level(c.level());
  ensure_level(N);
  const uint64_t step = level_ / c.level();
  const int64_t shift = mod_pos(k * static_cast<int64_t>(level_ / N), static_cast<int64_t>(level_));
  auto co = c.coeffs();
  for (std::size_t i = 0; i < co.size(); ++i)
    if (co[i] != 0) slots_[(i * step + shift) % level_] += co[i];
}

void CycloAccumulator::add_root(uint64_t N, int64_t k, long n) {
  if (n == 0) return;
  ensure_level(N);
  const int64_t pos = mod_pos(k * static_cast<int64_t>(level_ / N), static_cast<int64_t>(level_));
  slots_[pos] += n;
}

Cyclo CycloAccumulator::result() const { return Cyclo::from_power_array(level_, slots_); }

}  // namespace lt
