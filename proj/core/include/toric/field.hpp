#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

// GF(q), q = p^m <= 64. Elements are integers 0..q-1 encoding c_0 + c_1 p + ... +
// c_{m-1} p^{m-1}, the coefficients of a polynomial in x modulo a fixed Conway
// polynomial. For m = 1 this is the usual residue.
class FiniteField {
 public:
  using Elem = int;

  explicit FiniteField(std::int64_t q);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }
  // Coefficients of the defining polynomial, constant term first (x - 0 for prime fields).
  const std::vector<int>& modulus() const { return modulus_; }
  Elem primitive_element() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  // a^e for any integer e (a != 0 when e < 0).
  Elem pow(Elem a, long long e) const;
  // Integer for prime fields; "0", "1", "z" or "z^k" (z the primitive element) otherwise.
  std::string format(Elem a) const;

 private:
  int q_ = 0, p_ = 0, m_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, neg_;
  std::vector<int> log_;
  std::vector<Elem> exp_;
};

FiniteField gf(std::int64_t q);

}  // namespace toric
