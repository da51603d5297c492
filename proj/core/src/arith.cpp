#include "toric/arith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace toric {

namespace {

std::string budget_message(const std::string& budget, long double needed, long double limit) {
  std::ostringstream os;
  os << "budget exceeded: " << budget << " needs " << needed << " > limit " << limit
     << " (raise with TORIC_BUDGET)";
  return os.str();
}

}  // namespace

BudgetError::BudgetError(const std::string& budget, long double needed, long double limit)
    : DomainError(budget_message(budget, needed, limit)) {}

IntMatrix::IntMatrix(std::size_t nrows, std::size_t ncols)
    : rows_(nrows, IntVector(ncols)), ncols_(ncols) {}

IntMatrix::IntMatrix(std::vector<IntVector> rows)
    : rows_(std::move(rows)), ncols_(rows_.empty() ? 0 : rows_.front().size()) {
  for (const auto& r : rows_)
    if (r.size() != ncols_) throw DomainError("matrix rows have unequal length");
}

IntMatrix::IntMatrix(std::vector<IntVector> rows, std::size_t ncols)
    : rows_(std::move(rows)), ncols_(ncols) {
  for (const auto& r : rows_)
    if (r.size() != ncols_) throw DomainError("matrix rows have unequal length");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(ncols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.ncols() != b.nrows()) throw DomainError("matrix product: dimension mismatch");
  IntMatrix c(a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.ncols() != v.size()) throw DomainError("matrix-vector product: dimension mismatch");
  IntVector r(a.nrows());
  for (std::size_t i = 0; i < a.nrows(); ++i) r[i] = dot(a.row(i), v);
  return r;
}

IntVector make_vector(std::initializer_list<long long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVector> rs;
  for (const auto& r : rows) rs.push_back(make_vector(r));
  return IntMatrix(std::move(rs));
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector neg(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector scale(const Integer& c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer abs_max(const IntVector& v) {
  Integer m = 0;
  for (const auto& x : v) m = std::max(m, Integer(abs(x)));
  return m;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Integer ceil(const Rational& r) {
  return ceil_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

int sign(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Integer det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVector clear_denominators(const RationalVector& v) {
  Integer d = 1;
  for (const auto& x : v) d = lcm(d, boost::multiprecision::denominator(x));
  IntVector r;
  r.reserve(v.size());
  for (const auto& x : v)
    r.push_back(boost::multiprecision::numerator(x) * (d / boost::multiprecision::denominator(x)));
  return r;
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

long long to_ll(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw DomainError("integer " + x.str() + " exceeds machine range");
  return x.convert_to<long long>();
}

}  // namespace toric
