#include "toric/binomial.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "toric/budget.hpp"

namespace toric {

namespace {

using Exp = std::vector<long long>;

// y^lead - y^trail with lead > trail in the active order.
struct Poly {
  Exp lead;
  Exp trail;
};

// Degree reverse lexicographic order on variables [block, n), optionally preceded
// by an elimination block [0, block) compared first by grevlex.
struct Order {
  std::size_t block = 0;

  static int grevlex(const Exp& a, const Exp& b, std::size_t from, std::size_t to) {
    long long da = 0, db = 0;
    for (std::size_t i = from; i < to; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = to; i-- > from;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  bool greater(const Exp& a, const Exp& b) const {
    if (block > 0) {
      int c = grevlex(a, b, 0, block);
      if (c != 0) return c > 0;
    }
    return grevlex(a, b, block, a.size()) > 0;
  }
};

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

constexpr long long kExponentCap = 1LL << 40;

Exp shift(const Exp& m, const Exp& from, const Exp& to) {
  Exp r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i] = m[i] - from[i] + to[i];
    if (r[i] > kExponentCap) throw DomainError("binomial exponents exceed machine range");
  }
  return r;
}

Exp normal_form(Exp m, const std::vector<Poly>& g) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g)
      if (divides(p.lead, m)) {
        m = shift(m, p.lead, p.trail);
        changed = true;
        break;
      }
  }
  return m;
}

std::optional<Poly> orient(Exp a, Exp b, const Order& ord) {
  if (a == b) return std::nullopt;
  if (!ord.greater(a, b)) std::swap(a, b);
  return Poly{std::move(a), std::move(b)};
}

std::vector<Poly> buchberger(std::vector<Poly> g, const Order& ord) {
  const std::uint64_t pair_limit = budget_limit("groebner_pairs", 2000000);
  std::uint64_t pairs_done = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    if (++pairs_done > pair_limit) throw BudgetError("groebner_pairs", pairs_done, pair_limit);
    const Exp& li = g[i].lead;
    const Exp& lj = g[j].lead;
    bool coprime = true;
    Exp l(li.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
      l[k] = std::max(li[k], lj[k]);
      if (li[k] > 0 && lj[k] > 0) coprime = false;
    }
    if (coprime) continue;
    Exp a = normal_form(shift(l, li, g[i].trail), g);
    Exp b = normal_form(shift(l, lj, g[j].trail), g);
    auto p = orient(std::move(a), std::move(b), ord);
    if (!p) continue;
    g.push_back(std::move(*p));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].lead, g[i].lead)) continue;
      redundant = g[j].lead != g[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (auto& p : minimal) p.trail = normal_form(p.trail, minimal);
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) { return ord.greater(b.lead, a.lead); });
  return minimal;
}

Exp to_exp(const IntVector& v) {
  Exp e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = to_ll(v[i]);
  return e;
}

IntVector from_exp(const Exp& e) {
  IntVector v(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
  return v;
}

std::vector<Poly> to_polys(const BinomialIdeal& ideal, const Order& ord) {
  std::vector<Poly> out;
  for (const auto& b : ideal.generators) {
    if (b.num_vars() != ideal.num_vars) throw DomainError("binomial has wrong number of variables");
    if (auto p = orient(to_exp(b.lhs()), to_exp(b.rhs()), ord)) out.push_back(std::move(*p));
  }
  return out;
}

bool member(const std::vector<Poly>& gb, const Binomial& b) {
  return normal_form(to_exp(b.lhs()), gb) == normal_form(to_exp(b.rhs()), gb);
}

Binomial oriented(const Exp& a, const Exp& b) {
  IntVector x = from_exp(a), y = from_exp(b);
  if (x < y) std::swap(x, y);
  return Binomial(std::move(x), std::move(y));
}

long long total_degree(const Poly& p) {
  long long d = 0;
  for (auto x : p.lead) d += x;
  return d;
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Lattice ideal of the kernel of u, saturated by the product of all variables.
BinomialIdeal lattice_ideal_by_saturation(const SemigroupGens& gens, const IntMatrix& u);

// Counterclockwise from the positive x-axis; a strict weak order on nonzero vectors.
bool angle_less(const IntVector& a, const IntVector& b) {
  auto lower = [](const IntVector& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
  if (lower(a) != lower(b)) return !lower(a);
  return det2(a, b) > 0;
}

// Hilbert basis of a pointed 2D cone: ordered along the boundary, consecutive
// elements form a basis and u_{k-1} + u_{k+1} = a_k u_k with a_k >= 2. The ideal
// is then generated by x_i x_j - x_{i+1} (prod_{i<k<j} x_k^(a_k - 2)) x_{j-1},
// j >= i + 2 (Riemenschneider). Returns nullopt when the input is not of this shape.
std::optional<BinomialIdeal> planar_toric_ideal(const SemigroupGens& gens) {
  const std::size_t t = gens.gens.size();
  if (gens.ambient_dim != 2 || t < 3) return std::nullopt;
  for (const auto& g : gens.gens)
    if (is_zero(g)) return std::nullopt;
  std::vector<std::size_t> order(t);
  for (std::size_t i = 0; i < t; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return angle_less(gens.gens[i], gens.gens[j]); });
  // Rotate so the only cyclic gap of angle >= pi closes the list.
  std::optional<std::size_t> gap;
  for (std::size_t k = 0; k < t; ++k) {
    if (det2(gens.gens[order[k]], gens.gens[order[(k + 1) % t]]) > 0) continue;
    if (gap) return std::nullopt;
    gap = k;
  }
  if (!gap) return std::nullopt;
  std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>((*gap + 1) % t), order.end());
  const auto& u = gens.gens;
  for (std::size_t k = 0; k + 1 < t; ++k)
    if (det2(u[order[k]], u[order[k + 1]]) != 1) return std::nullopt;
  std::vector<Integer> a(t, 0);
  for (std::size_t k = 1; k + 1 < t; ++k) {
    IntVector s = add(u[order[k - 1]], u[order[k + 1]]);
    // s = a u with det(u_k, u_{k+1}) = 1 gives a = det(s, u_{k+1}).
    a[k] = det2(s, u[order[k + 1]]);
    if (a[k] < 2 || scale(a[k], u[order[k]]) != s) return std::nullopt;
  }
  BinomialIdeal out{t, {}};
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 2; j < t; ++j) {
      Exp l(t, 0), r(t, 0);
      l[order[i]] += 1;
      l[order[j]] += 1;
      r[order[i + 1]] += 1;
      r[order[j - 1]] += 1;
      for (std::size_t k = i + 1; k < j; ++k) r[order[k]] += to_ll(a[k] - 2);
      out.generators.push_back(oriented(l, r));
    }
  return out;
}

}  // namespace

Binomial::Binomial(IntVector lhs, IntVector rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_.size() != rhs_.size()) throw DomainError("binomial sides have different lengths");
  if (lhs_ == rhs_) throw DomainError("binomial is identically zero");
  for (std::size_t i = 0; i < lhs_.size(); ++i) {
    if (lhs_[i] < 0 || rhs_[i] < 0) throw DomainError("binomial exponents must be nonnegative");
    if (lhs_[i] > 0 && rhs_[i] > 0) throw DomainError("binomial sides must have disjoint supports");
  }
}

Binomial Binomial::from_difference(const IntVector& diff) {
  IntVector p(diff.size()), n(diff.size());
  for (std::size_t i = 0; i < diff.size(); ++i) (diff[i] > 0 ? p[i] : n[i]) = abs(diff[i]);
  return Binomial(std::move(p), std::move(n));
}

std::vector<Binomial> groebner_basis(const BinomialIdeal& ideal) {
  Order ord;
  std::vector<Binomial> out;
  for (const auto& p : buchberger(to_polys(ideal, ord), ord)) out.emplace_back(from_exp(p.lead), from_exp(p.trail));
  return out;
}

bool ideal_contains(const BinomialIdeal& ideal, const Binomial& b) {
  if (b.num_vars() != ideal.num_vars) throw DomainError("binomial has wrong number of variables");
  Order ord;
  return member(buchberger(to_polys(ideal, ord), ord), b);
}

bool same_ideal(const BinomialIdeal& a, const BinomialIdeal& b) {
  if (a.num_vars != b.num_vars) return false;
  Order ord;
  auto ga = buchberger(to_polys(a, ord), ord);
  auto gb = buchberger(to_polys(b, ord), ord);
  for (const auto& x : b.generators)
    if (!member(ga, x)) return false;
  for (const auto& x : a.generators)
    if (!member(gb, x)) return false;
  return true;
}

bool vanishes_on(const BinomialIdeal& ideal, const MonomialMap& map) {
  if (map.exponents.size() != ideal.num_vars) throw DomainError("map and ideal disagree on variable count");
  for (const auto& b : ideal.generators) {
    IntVector l(map.source_dim), r(map.source_dim);
    for (std::size_t i = 0; i < ideal.num_vars; ++i) {
      l = add(l, scale(b.lhs()[i], map.exponents[i]));
      r = add(r, scale(b.rhs()[i], map.exponents[i]));
    }
    if (l != r) return false;
  }
  return true;
}

BinomialIdeal toric_ideal(const SemigroupGens& gens) {
  const std::size_t t = gens.gens.size();
  if (t == 0) throw DomainError("toric_ideal: empty generator list");
  IntMatrix u(gens.ambient_dim, t);
  for (std::size_t i = 0; i < t; ++i) {
    if (gens.gens[i].size() != gens.ambient_dim) throw DomainError("semigroup generator has wrong dimension");
    for (std::size_t r = 0; r < gens.ambient_dim; ++r) u(r, i) = gens.gens[i][r];
  }
  BinomialIdeal out{t, {}};
  if (auto planar = planar_toric_ideal(gens)) out = std::move(*planar);
  else out = lattice_ideal_by_saturation(gens, u);
  std::sort(out.generators.begin(), out.generators.end(),
            [](const Binomial& a, const Binomial& b) { return b.lhs() < a.lhs() || (a.lhs() == b.lhs() && b.rhs() < a.rhs()); });
  return out;
}

namespace {

BinomialIdeal lattice_ideal_by_saturation(const SemigroupGens& gens, const IntMatrix& u) {
  const std::size_t t = gens.gens.size();
  BinomialIdeal out{t, {}};
  IntMatrix kernel = gens.ambient_dim == 0 ? IntMatrix::identity(t) : integer_kernel_basis(u);
  if (kernel.empty()) return out;

  // Saturate by eliminating s from J + <s*y_1*...*y_t - 1>; variable 0 is s.
  Order elim{1};
  std::vector<Poly> seed;
  Exp unit(t + 1, 1), one(t + 1, 0);
  seed.push_back(*orient(unit, one, elim));
  for (const auto& k : kernel.rows()) {
    Binomial b = Binomial::from_difference(k);
    Exp a(t + 1, 0), c(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i) {
      a[i + 1] = to_ll(b.lhs()[i]);
      c[i + 1] = to_ll(b.rhs()[i]);
    }
    seed.push_back(*orient(a, c, elim));
  }
  Order ord;
  std::vector<Poly> lattice_gb;
  for (const auto& p : buchberger(seed, elim)) {
    if (p.lead[0] != 0 || p.trail[0] != 0) continue;
    lattice_gb.push_back(*orient(Exp(p.lead.begin() + 1, p.lead.end()), Exp(p.trail.begin() + 1, p.trail.end()), ord));
  }

  std::stable_sort(lattice_gb.begin(), lattice_gb.end(),
                   [](const Poly& a, const Poly& b) { return total_degree(a) < total_degree(b); });
  std::vector<Poly> kept;
  for (const auto& p : lattice_gb) {
    auto gb = buchberger(kept, ord);
    if (normal_form(p.lead, gb) != normal_form(p.trail, gb)) kept.push_back(p);
  }
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Poly> others = kept;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    auto gb = buchberger(others, ord);
    if (normal_form(kept[i].lead, gb) == normal_form(kept[i].trail, gb)) kept = std::move(others);
  }

  for (const auto& p : kept) out.generators.push_back(oriented(p.lead, p.trail));
  return out;
}

}  // namespace

MonomialMap torus_embedding(const Cone& c, const Lattice& l) {
  SemigroupGens hb = hilbert_basis(c, l);
  return {hb.ambient_dim, hb.gens};
}

AffineToricVariety affine_toric_variety(const Cone& c, const Lattice& l) {
  AffineToricVariety v;
  v.cone = c;
  v.semigroup = hilbert_basis(c, l);
  v.ideal = toric_ideal(v.semigroup);
  v.embedding = {v.semigroup.ambient_dim, v.semigroup.gens};
  return v;
}

BinomialIdeal create_torus(std::size_t n) {
  if (n == 0) throw DomainError("create_torus: dimension must be positive");
  BinomialIdeal out{2 * n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector l(2 * n), r(2 * n);
    l[i] = 1;
    l[n + i] = 1;
    out.generators.emplace_back(std::move(l), std::move(r));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> toric_points(const BinomialIdeal& ideal, std::int64_t q) {
  if (!is_prime(q)) throw DomainError("toric_points: q = " + std::to_string(q) + " must be prime");
  const std::size_t t = ideal.num_vars;
  long double total = 1;
  for (std::size_t i = 0; i < t; ++i) total *= static_cast<long double>(q);
  check_budget("toric_points", total, 10000000);

  std::vector<std::pair<Exp, Exp>> gens;
  for (const auto& b : ideal.generators) gens.emplace_back(to_exp(b.lhs()), to_exp(b.rhs()));
  // pw[v][e] = v^e mod q for the exponents that occur.
  long long max_e = 0;
  for (const auto& [l, r] : gens)
    for (std::size_t i = 0; i < t; ++i) max_e = std::max({max_e, l[i], r[i]});
  std::vector<std::vector<std::int64_t>> pw(static_cast<std::size_t>(q), std::vector<std::int64_t>(max_e + 1));
  for (std::int64_t v = 0; v < q; ++v) {
    pw[v][0] = 1;
    for (long long e = 1; e <= max_e; ++e) pw[v][e] = pw[v][e - 1] * v % q;
  }
  auto eval = [&](const Exp& e, const std::vector<std::int64_t>& x) {
    std::int64_t r = 1;
    for (std::size_t i = 0; i < t; ++i) r = r * pw[x[i]][e[i]] % q;
    return r;
  };

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(t, 0);
  for (;;) {
    bool ok = true;
    for (const auto& [l, r] : gens)
      if (eval(l, x) != eval(r, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
    std::size_t k = t;
    while (k > 0) {
      if (++x[k - 1] < q) break;
      x[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace toric
