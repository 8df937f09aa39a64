#include "lt/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lt/error.hpp"

namespace lt {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
    case Errc::InfiniteCokernel: return "InfiniteCokernel";
    case Errc::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::IncompatibleLevel: return "IncompatibleLevel";
    case Errc::LevelTooLarge: return "LevelTooLarge";
    case Errc::UnsupportedName: return "UnsupportedName";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoLift: return "NoLift";
    case Errc::DatumMismatch: return "DatumMismatch";
    case Errc::WeightCountMismatch: return "WeightCountMismatch";
    case Errc::InfiniteFixedPoints: return "InfiniteFixedPoints";
    case Errc::TorusMismatch: return "TorusMismatch";
    case Errc::NotIntertwining: return "NotIntertwining";
    case Errc::GuardViolation: return "GuardViolation";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::InvalidMorphism: return "InvalidMorphism";
    case Errc::UnsupportedGroup: return "UnsupportedGroup";
    case Errc::NoOrderFormula: return "NoOrderFormula";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MissingTable: return "MissingTable";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::TrivialAdditiveCharacter: return "TrivialAdditiveCharacter";
  }
  return "Unknown";
}

int64_t to_int64(const Integer& z) {
  require(z.fits_slong_p(), Errc::GuardViolation, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, Errc::ShapeMismatch, "entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    require(r.size() == cols_, Errc::ShapeMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, Errc::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  require(x.size() == cols_, Errc::ShapeMismatch, "vector length does not match matrix width");
  IntVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& z) { return z == 0; });
}

Integer IntMatrix::determinant() const {
  require(is_square(), Errc::ShapeMismatch, "determinant of non-square matrix");
  if (rows_ == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = *this;
  Integer sign = 1, prev = 1;
  const std::size_t n = rows_;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, Errc::ShapeMismatch, "matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, Errc::ShapeMismatch, "matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, Errc::ShapeMismatch, "matrix difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

struct SnfState {
  IntMatrix D, U, Ui, V;
  std::size_t m, n;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(U(a, j), U(b, j));
    for (std::size_t i = 0; i < m; ++i) std::swap(Ui(i, a), Ui(i, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(V(i, a), V(i, b));
  }
  // row_dst += k * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < n; ++j) D(dst, j) += k * D(src, j);
    for (std::size_t j = 0; j < m; ++j) U(dst, j) += k * U(src, j);
    for (std::size_t i = 0; i < m; ++i) Ui(i, src) -= k * Ui(i, dst);
  }
  // col_dst += k * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < m; ++i) D(i, dst) += k * D(i, src);
    for (std::size_t i = 0; i < n; ++i) V(i, dst) += k * V(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < n; ++j) D(r, j) = -D(r, j);
    for (std::size_t j = 0; j < m; ++j) U(r, j) = -U(r, j);
    for (std::size_t i = 0; i < m; ++i) Ui(i, r) = -Ui(i, r);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  SnfState s{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.rows()),
             IntMatrix::identity(A.cols()), A.rows(), A.cols()};
  const std::size_t steps = std::min(s.m, s.n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero |entry| in the trailing block; ties go to the lowest (row, col).
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < s.m; ++i)
        for (std::size_t j = t; j < s.n; ++j) {
          if (s.D(i, j) == 0) continue;
          if (!piv || mpz_cmpabs(s.D(i, j).get_mpz_t(), s.D(piv->first, piv->second).get_mpz_t()) < 0) piv = {i, j};
        }
      if (!piv) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, piv->first);
      s.swap_cols(t, piv->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < s.m; ++i) {
        if (s.D(i, t) == 0) continue;
        Integer q = s.D(i, t) / s.D(t, t);  // truncating
        if (q != 0) s.add_row(i, t, -q);
        if (s.D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < s.n; ++j) {
        if (s.D(t, j) == 0) continue;
        Integer q = s.D(t, j) / s.D(t, t);
        if (q != 0) s.add_col(j, t, -q);
        if (s.D(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < s.m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < s.n; ++j)
          if (!mpz_divisible_p(s.D(i, j).get_mpz_t(), s.D(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        s.add_row(t, *bad_row, 1);
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (s.D(t, t) < 0) s.negate_row(t);
  }
  return SmithDecomposition{std::move(s.U), std::move(s.Ui), std::move(s.V), std::move(s.D)};
}

// ---------------------------------------------------------------------------
// Q/Z

namespace {

int64_t mod_floor(__int128 a, int64_t b) {
  __int128 r = a % b;
  if (r < 0) r += b;
  return static_cast<int64_t>(r);
}

}  // namespace

QmodZ::QmodZ(int64_t num, int64_t den) {
  require(den > 0, Errc::InvalidArgument, "Q/Z denominator must be positive");
  int64_t a = mod_floor(num, den);
  int64_t g = std::gcd(a, den);
  if (a == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    num_ = a / g;
    den_ = den / g;
  }
}

QmodZ operator+(QmodZ a, QmodZ b) {
  const int64_t g = std::gcd(a.den_, b.den_);
  const int64_t l = a.den_ / g * b.den_;
  const __int128 n = static_cast<__int128>(a.num_) * (l / a.den_) + static_cast<__int128>(b.num_) * (l / b.den_);
  return QmodZ(mod_floor(n, l), l);
}

QmodZ operator-(QmodZ a, QmodZ b) { return a + (-b); }

QmodZ operator*(int64_t k, QmodZ a) {
  return QmodZ(mod_floor(static_cast<__int128>(k) * a.num_, a.den_), a.den_);
}

std::string QmodZ::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QmodZ QmodZ::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return QmodZ(std::stoll(text), 1);
    return QmodZ(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::Parse, "cannot parse fraction '" + text + "'");
  }
}

QmodZVec::QmodZVec(std::vector<QmodZ> coords, std::optional<int64_t> coprime_to)
    : coords_(std::move(coords)), coprime_to_(coprime_to) {
  if (coprime_to_) {
    for (const auto& c : coords_)
      require(std::gcd(c.den(), *coprime_to_) == 1, Errc::InvalidArgument,
              "denominator " + std::to_string(c.den()) + " not coprime to p = " + std::to_string(*coprime_to_));
  }
}

bool QmodZVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const QmodZ& c) { return c.is_zero(); });
}

int64_t QmodZVec::order() const {
  int64_t l = 1;
  for (const auto& c : coords_) l = std::lcm(l, c.den());
  return l;
}

QmodZVec QmodZVec::transformed(const IntMatrix& M) const {
  require(M.cols() == coords_.size(), Errc::ShapeMismatch, "matrix width does not match point rank");
  const int64_t l = order();
  std::vector<QmodZ> out;
  out.reserve(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) acc += M(i, j) * (coords_[j].num() * (l / coords_[j].den()));
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(l));
    out.emplace_back(r.get_si(), l);
  }
  return QmodZVec(std::move(out), coprime_to_);
}

std::string QmodZVec::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += coords_[i].to_string();
  }
  return s + "]";
}

QmodZVec QmodZVec::parse(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == ' '; }), body.end());
  if (!body.empty() && body.front() == '[') body.erase(body.begin());
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<QmodZ> coords;
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    auto comma = body.find(',', start);
    coords.push_back(QmodZ::parse(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return QmodZVec(std::move(coords));
}

// ---------------------------------------------------------------------------
// Finite abelian groups

FinAbGroup::FinAbGroup(std::vector<int64_t> factors, IntMatrix projection, IntMatrix lift)
    : factors_(std::move(factors)), projection_(std::move(projection)), lift_(std::move(lift)) {
  order_ = 1;
  for (int64_t d : factors_) {
    require(d >= 1, Errc::InvalidArgument, "invariant factors must be positive");
    require(order_ <= (int64_t{1} << 62) / d, Errc::GuardViolation, "group order exceeds 2^62");
    order_ *= d;
  }
}

std::vector<int64_t> FinAbGroup::nontrivial_factors() const {
  std::vector<int64_t> out;
  for (int64_t d : factors_)
    if (d > 1) out.push_back(d);
  return out;
}

int64_t FinAbGroup::exponent() const { return factors_.empty() ? 1 : factors_.back(); }

FinAbGroup::Coords FinAbGroup::project(const IntVector& x) const {
  IntVector y = projection_.apply(x);
  Coords c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), y[i].get_mpz_t(), static_cast<unsigned long>(factors_[i]));
    c[i] = r.get_si();
  }
  return c;
}

IntVector FinAbGroup::lift(const Coords& c) const {
  require(valid(c), Errc::CoordinateOutOfRange, "coordinate tuple out of range");
  IntVector x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) x[i] = static_cast<long>(c[i]);
  return lift_.apply(x);
}

bool FinAbGroup::valid(const Coords& c) const {
  if (c.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0 || c[i] >= factors_[i]) return false;
  return true;
}

FinAbGroup::Coords FinAbGroup::add(const Coords& a, const Coords& b) const {
  Coords c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
  return c;
}

FinAbGroup::Coords FinAbGroup::negate(const Coords& a) const {
  Coords c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
  return c;
}

FinAbGroup::Coords FinAbGroup::element(int64_t index) const {
  Coords c(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    c[k] = index % factors_[k];
    index /= factors_[k];
  }
  return c;
}

int64_t FinAbGroup::index(const Coords& c) const {
  int64_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) idx = idx * factors_[k] + c[k];
  return idx;
}

std::string FinAbGroup::to_string() const {
  auto f = nontrivial_factors();
  if (f.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(f[i]);
  }
  return s;
}

FinAbGroup cokernel(const IntMatrix& A) {
  auto snf = smith_normal_form(A);
  std::vector<int64_t> factors(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Integer d = i < A.cols() ? snf.D(i, i) : Integer(0);
    require(d != 0, Errc::InfiniteCokernel, "cokernel of " + A.to_string() + " is infinite");
    factors[i] = to_int64(d);
  }
  return FinAbGroup(std::move(factors), std::move(snf.U), std::move(snf.U_inv));
}

std::vector<IntVector> saturated_kernel(const IntMatrix& A) {
  auto snf = smith_normal_form(A);
  std::vector<IntVector> basis;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    bool zero_col = j >= A.rows() || snf.D(j, j) == 0;
    if (!zero_col) continue;
    IntVector v(A.cols());
    for (std::size_t i = 0; i < A.cols(); ++i) v[i] = snf.V(i, j);
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& z) { return z != 0; });
    if (first != v.end() && *first < 0)
      for (auto& z : v) z = -z;
    basis.push_back(std::move(v));
  }
  return basis;
}

QmodZ pair(const FinAbGroup& G, const FinAbGroup::Coords& elt, const FinAbGroup::Coords& chr) {
  require(G.valid(elt) && G.valid(chr), Errc::CoordinateOutOfRange, "pairing coordinates out of range");
  QmodZ acc;
  for (std::size_t i = 0; i < elt.size(); ++i) {
    const int64_t d = G.invariant_factors()[i];
    acc = acc + QmodZ(static_cast<int64_t>((static_cast<__int128>(elt[i]) * chr[i]) % d), d);
  }
  return acc;
}

}  // namespace lt
