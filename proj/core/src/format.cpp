#include "toric/format.hpp"

#include <algorithm>

namespace toric {

std::string gap(const IntVector& v) {
  std::string s = "[ ";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + " ]";
}

std::string gap(const std::vector<IntVector>& vs) {
  if (vs.empty()) return "[  ]";
  std::string s = "[ ";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + gap(vs[i]);
  return s + " ]";
}

std::string gap(const std::vector<std::vector<IntVector>>& vss) {
  if (vss.empty()) return "[  ]";
  std::string s = "[ ";
  for (std::size_t i = 0; i < vss.size(); ++i) s += (i ? ", " : "") + gap(vss[i]);
  return s + " ]";
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

namespace {

// Factors with positive exponent (sign = 1) or negative exponent (sign = -1).
std::vector<std::string> factors(const IntVector& e, const std::vector<std::string>& names, int sgn) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (sign(e[i]) != sgn) continue;
    Integer a = abs(e[i]);
    out.push_back(a == 1 ? names.at(i) : names.at(i) + "^" + a.str());
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

}  // namespace

std::string magma_monomial(const IntVector& e, const std::vector<std::string>& names) {
  for (const auto& x : e)
    if (x < 0) throw DomainError("negative exponent in a polynomial monomial");
  auto f = factors(e, names, 1);
  return f.empty() ? "1" : join(f, "*");
}

std::string magma_fraction(const IntVector& e, const std::vector<std::string>& names) {
  auto num = factors(e, names, 1);
  auto den = factors(e, names, -1);
  std::string s = num.empty() ? "1" : join(num, "*");
  if (den.empty()) return s;
  return s + "/" + (den.size() == 1 ? den[0] : "(" + join(den, "*") + ")");
}

std::string magma_binomial(const Binomial& b, const std::vector<std::string>& names) {
  return magma_monomial(b.lhs(), names) + " - " + magma_monomial(b.rhs(), names);
}

std::string magma_sequence(const std::vector<std::string>& items) {
  std::string s = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) s += "    " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
  return s + "]";
}

std::string magma_ideal(const BinomialIdeal& ideal) {
  auto names = numbered("x", ideal.num_vars);
  std::vector<std::string> items;
  for (const auto& b : ideal.generators) items.push_back(magma_binomial(b, names));
  std::string s = "Ideal of Polynomial ring of rank " + std::to_string(ideal.num_vars) +
                  " over Rational Field\nLexicographical Order\nVariables: " + join(names, ", ") +
                  "\nBasis:\n";
  return s + magma_sequence(items);
}

std::string magma_embedding(const MonomialMap& map) {
  std::size_t n = map.source_dim;
  auto names = numbered("x", 2 * n);
  std::string s = "Mapping from: Scheme over Rational Field defined by\n";
  for (std::size_t i = 1; i <= n; ++i)
    s += "x" + std::to_string(i) + "*x" + std::to_string(n + i) + " - 1" + (i < n ? "\n" : "");
  s += " to Affine Space of dimension " + std::to_string(map.exponents.size()) + "\n";
  s += "Variables : " + join(numbered("$.", map.exponents.size()), ", ") + "\nwith equations :\n";
  for (const auto& e : map.exponents) {
    IntVector split(2 * n);
    for (std::size_t i = 0; i < n; ++i) (e[i] >= 0 ? split[i] : split[n + i]) = abs(e[i]);
    s += magma_monomial(split, names) + "\n";
  }
  return s;
}

std::string magma_chart(const MonomialMap& map) {
  std::size_t n = map.source_dim;
  auto dollars = numbered("$.", n);
  std::string s = "Mapping from: Affine Space of dimension " + std::to_string(n) + "\nVariables : " +
                  join(numbered("x", n), ", ") + " to Affine Space of dimension " +
                  std::to_string(map.exponents.size()) + "\nVariables : " +
                  join(numbered("$.", map.exponents.size()), ", ") + "\nwith equations :\n";
  for (const auto& e : map.exponents) s += magma_fraction(e, dollars) + "\n";
  return s;
}

std::string magma_lattice(const std::vector<IntVector>& basis, const std::optional<Integer>& denominator) {
  std::size_t width = 1, degree = basis.empty() ? 0 : basis[0].size();
  for (const auto& r : basis)
    for (const auto& x : r) width = std::max(width, x.str().size());
  std::string s = "Lattice of rank " + std::to_string(basis.size()) + " and degree " + std::to_string(degree) +
                  "\nBasis:\n";
  for (const auto& r : basis) {
    s += "(";
    for (std::size_t j = 0; j < r.size(); ++j) {
      std::string x = r[j].str();
      s += (j ? " " : "") + std::string(width - x.size(), ' ') + x;
    }
    s += ")\n";
  }
  if (denominator) s += "Basis Denominator: " + denominator->str() + "\n";
  return s;
}

std::string magma_code_header(std::size_t n, std::size_t k, std::size_t d, std::int64_t q) {
  return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) +
         "] Linear Code over GF(" + std::to_string(q) + ")";
}

}  // namespace toric
