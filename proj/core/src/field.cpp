#include "toric/field.hpp"

#include <map>

#include "toric/arith.hpp"

namespace toric {

namespace {

// Conway polynomials, constant term first.
const std::map<int, std::vector<int>>& conway_table() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},       {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 1, 1, 0, 1}}, {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},      {25, {2, 4, 1}},         {49, {3, 6, 1}},
  };
  return table;
}

std::vector<int> digits(int a, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Multiplies by x modulo the monic polynomial f of degree m.
int times_x(int a, int p, int m, const std::vector<int>& f) {
  auto d = digits(a, p, m);
  int top = d[m - 1];
  for (int i = m - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  for (int i = 0; i < m; ++i) d[i] = ((d[i] - top * f[i]) % p + p) % p;
  return undigits(d, p);
}

}  // namespace

FiniteField::FiniteField(std::int64_t q) {
  if (q < 2 || q > 64) throw DomainError("GF(" + std::to_string(q) + "): only prime powers up to 64 are supported");
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw DomainError("GF(" + std::to_string(q) + "): q is not a prime power");
  q_ = static_cast<int>(q);
  p_ = p;
  m_ = m;

  add_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p_, m_);
    std::vector<int> dn(m_);
    for (int i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p_, m_);
      std::vector<int> ds(m_);
      for (int i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = undigits(ds, p_);
    }
  }

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  auto try_generator = [&](auto step) {
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
      if (log_[x] != -1) return false;
      log_[x] = k;
      exp_[k] = x;
      x = step(x);
    }
    return x == 1;
  };
  if (m_ == 1) {
    modulus_ = {0, 1};
    for (int g = 1; g < q_; ++g) {
      log_.assign(q_, -1);
      if (try_generator([&](int x) { return x * g % q_; })) return;
    }
    throw DomainError("GF(" + std::to_string(q) + "): no primitive element found");
  }
  modulus_ = conway_table().at(q_);
  if (!try_generator([&](int x) { return times_x(x, p_, m_, modulus_); }))
    throw DomainError("GF(" + std::to_string(q) + "): defining polynomial is not primitive");
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long k = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

std::string FiniteField::format(Elem a) const {
  if (m_ == 1 || a <= 1) return std::to_string(a);
  if (log_[a] == 1) return "z";
  return "z^" + std::to_string(log_[a]);
}

FiniteField gf(std::int64_t q) { return FiniteField(q); }

}  // namespace toric
