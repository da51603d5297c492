#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

// An enumeration would exceed its configured size limit.
class BudgetError : public DomainError {
 public:
  BudgetError(const std::string& budget, long double needed, long double limit);
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t nrows, std::size_t ncols);
  explicit IntMatrix(std::vector<IntVector> rows);
  IntMatrix(std::vector<IntVector> rows, std::size_t ncols);

  static IntMatrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool empty() const { return rows_.empty(); }

  const std::vector<IntVector>& rows() const { return rows_; }
  const IntVector& row(std::size_t i) const { return rows_[i]; }
  IntVector column(std::size_t j) const;
  const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<IntVector> rows_;
  std::size_t ncols_ = 0;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);

IntVector make_vector(std::initializer_list<long long> xs);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long long>> rows);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector neg(const IntVector& a);
IntVector scale(const Integer& c, const IntVector& a);
bool is_zero(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
Integer abs_max(const IntVector& v);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
int sign(const Integer& a);
// Returns g = gcd(a, b) >= 0 and sets x, y with a x + b y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

// 2x2 determinant of the vectors a, b.
Integer det2(const IntVector& a, const IntVector& b);

RationalVector to_rational(const IntVector& v);
// v scaled by the lcm of its denominators.
IntVector clear_denominators(const RationalVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const RationalVector& v);
std::string to_string(const Rational& r);

long long to_ll(const Integer& x);  // throws DomainError when out of range

}  // namespace toric
