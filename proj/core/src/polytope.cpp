#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toric/budget.hpp"

namespace toric {

namespace {

Rational rdot(const RationalVector& x, const IntVector& a) { return dot(x, a); }

bool satisfies(const RationalVector& x, const Inequality& q) { return rdot(x, q.normal) + q.offset >= 0; }

IntMatrix rows_matrix(const std::vector<IntVector>& rows, std::size_t n) { return IntMatrix(rows, n); }

std::vector<RationalVector> enumerate_vertices(std::size_t n, const std::vector<Inequality>& ineqs) {
  std::set<RationalVector> found;
  const std::size_t m = ineqs.size();
  if (n == 0) return {RationalVector{}};
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == n) {
      std::vector<IntVector> a;
      RationalVector b;
      for (auto i : idx) {
        a.push_back(ineqs[i].normal);
        b.push_back(-ineqs[i].offset);
      }
      IntMatrix am = rows_matrix(a, n);
      if (rank(am) != n) return;
      auto x = solve_rational(am, b);
      if (!x) return;
      for (const auto& q : ineqs)
        if (!satisfies(*x, q)) return;
      found.insert(*x);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

IntVector homogenize(const RationalVector& v) {
  RationalVector h{Rational(1)};
  h.insert(h.end(), v.begin(), v.end());
  return clear_denominators(h);
}

// Inequalities (including both halves of equations) cutting out conv(vertices).
std::vector<Inequality> hrep_from_vertices(std::size_t n, const std::vector<RationalVector>& vertices) {
  std::vector<IntVector> gens;
  for (const auto& v : vertices) gens.push_back(homogenize(v));
  Cone c(n + 1, gens);
  std::vector<IntVector> rows = c.halfspaces().normals;
  for (const auto& e : c.halfspaces().equations) {
    rows.push_back(e);
    rows.push_back(neg(e));
  }
  std::set<std::pair<IntVector, Rational>> out;
  for (const auto& r : rows) {
    IntVector a(r.begin() + 1, r.end());
    Integer g = content(a);
    if (g == 0) continue;
    for (auto& x : a) x /= g;
    out.emplace(a, Rational(r[0], g));
  }
  std::vector<Inequality> v;
  for (const auto& [a, c0] : out) v.push_back({a, c0});
  return v;
}

void require_dim(std::size_t n) {
  if (n > 3) throw UnsupportedDimension("polytopes of dimension > 3 are not supported");
}

std::size_t ray_index(const Fan& f, const IntVector& ray) {
  const auto& rays = f.rays();
  auto it = std::find(rays.begin(), rays.end(), ray);
  if (it == rays.end()) throw DomainError("vector " + to_string(ray) + " is not a ray of the fan");
  return static_cast<std::size_t>(it - rays.begin());
}

}  // namespace

LatticePolytope LatticePolytope::from_inequalities(std::size_t n, std::vector<Inequality> ineqs) {
  require_dim(n);
  LatticePolytope p;
  p.n_ = n;
  std::vector<IntVector> normals;
  bool infeasible = false;
  for (auto& q : ineqs) {
    if (q.normal.size() != n) throw DomainError("inequality normal has wrong dimension");
    if (is_zero(q.normal)) {
      if (q.offset < 0) infeasible = true;
      continue;
    }
    normals.push_back(q.normal);
    p.ineqs_.push_back(std::move(q));
  }
  if (!dual_cone(Cone(n, normals)).generators().empty()) throw DomainError("polyhedron is unbounded");
  if (!infeasible) p.vertices_ = enumerate_vertices(n, p.ineqs_);
  return p;
}

LatticePolytope LatticePolytope::from_vertices(std::size_t n, const std::vector<RationalVector>& vertices) {
  require_dim(n);
  for (const auto& v : vertices)
    if (v.size() != n) throw DomainError("vertex has wrong dimension");
  if (vertices.empty()) {
    LatticePolytope p;
    p.n_ = n;
    if (n > 0) {
      IntVector e(n);
      e[0] = 1;
      p.ineqs_ = {{e, Rational(-1)}, {neg(e), Rational(0)}};
    }
    return p;
  }
  return from_inequalities(n, hrep_from_vertices(n, vertices));
}

LatticePolytope LatticePolytope::from_vertices(std::size_t n, const std::vector<IntVector>& vertices) {
  std::vector<RationalVector> r;
  for (const auto& v : vertices) r.push_back(to_rational(v));
  return from_vertices(n, r);
}

std::size_t LatticePolytope::dim() const {
  if (vertices_.size() < 2) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    RationalVector d(n_);
    for (std::size_t j = 0; j < n_; ++j) d[j] = vertices_[i][j] - vertices_[0][j];
    diffs.push_back(clear_denominators(d));
  }
  return rank(diffs, n_);
}

bool LatticePolytope::contains(const RationalVector& x) const {
  if (x.size() != n_) throw DomainError("point has wrong dimension");
  if (is_empty()) return false;
  for (const auto& q : ineqs_)
    if (!satisfies(x, q)) return false;
  return true;
}

bool LatticePolytope::contains(const IntVector& x) const { return contains(to_rational(x)); }

std::vector<Inequality> facets(const LatticePolytope& p) {
  if (p.is_empty() || p.dim() != p.ambient_dim()) throw DomainError("polytope is not full-dimensional");
  return hrep_from_vertices(p.ambient_dim(), p.vertices());
}

Rational area(const LatticePolytope& p) {
  if (p.ambient_dim() != 2) throw DomainError("area: polytope must be 2-dimensional");
  if (p.dim() < 2) return 0;
  auto v = p.vertices();
  RationalVector c{0, 0};
  for (const auto& x : v) {
    c[0] += x[0];
    c[1] += x[1];
  }
  c[0] /= v.size();
  c[1] /= v.size();
  auto half = [&](const RationalVector& x) {
    Rational dx = x[0] - c[0], dy = x[1] - c[1];
    return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;
  };
  std::sort(v.begin(), v.end(), [&](const RationalVector& a, const RationalVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]) > 0;
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / 2;
}

std::vector<IntVector> lattice_points(const LatticePolytope& p) {
  if (p.is_empty()) return {};
  const std::size_t n = p.ambient_dim();
  IntVector lo(n), hi(n);
  long double box = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil(mn);
    hi[j] = floor(mx);
    if (hi[j] < lo[j]) return {};
    box *= (hi[j] - lo[j] + 1).convert_to<long double>();
  }
  check_budget("lattice_points", box, 10000000);
  std::vector<IntVector> out;
  IntVector x = lo;
  for (;;) {
    if (p.contains(x)) out.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      if (++x[k - 1] <= hi[k - 1]) break;
      x[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

Integer support_value(const SupportFunction& h, const IntVector& ray) {
  if (h.ray_values.size() != h.fan.rays().size()) throw DomainError("support function has wrong number of ray values");
  return h.ray_values[ray_index(h.fan, ray)];
}

RationalVector linear_piece(const SupportFunction& h, const Cone& sigma) {
  const std::size_t n = h.fan.ambient_dim();
  std::vector<IntVector> rows;
  RationalVector b;
  for (const auto& g : sigma.generators()) {
    rows.push_back(g);
    b.push_back(Rational(support_value(h, g)));
  }
  if (rows.empty()) return RationalVector(n);
  auto x = solve_rational(IntMatrix(rows, n), b);
  if (!x) throw DomainError("support function is not linear on cone " + to_string(sigma.generators().front()) + "...");
  return *x;
}

Fan fan_from_polytope(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  if (p.is_empty() || p.dim() != n) throw DomainError("fan_from_polytope: polytope is not full-dimensional");
  auto fs = facets(p);
  std::vector<Cone> cones;
  for (const auto& v : p.vertices()) {
    std::vector<IntVector> active;
    for (const auto& q : fs)
      if (rdot(v, q.normal) + q.offset == 0) active.push_back(q.normal);
    cones.emplace_back(n, active);
  }
  return validate_fan(n, cones);
}

SupportFunction support_from_polytope(const LatticePolytope& p, const Fan& f) {
  if (p.ambient_dim() != f.ambient_dim()) throw DomainError("polytope and fan dimensions differ");
  if (p.is_empty()) throw DomainError("support_from_polytope: empty polytope");
  SupportFunction h{f, {}};
  for (const auto& r : f.rays()) {
    Rational mn = rdot(p.vertices()[0], r);
    for (const auto& v : p.vertices()) mn = std::min(mn, rdot(v, r));
    if (boost::multiprecision::denominator(mn) != 1)
      throw DomainError("support value at ray " + to_string(r) + " is not integral");
    h.ray_values.push_back(-boost::multiprecision::numerator(mn));
  }
  return h;
}

LatticePolytope polytope_from_support(const Fan& f, const SupportFunction& h) {
  for (const auto& c : f.maximal_cones()) linear_piece(h, c);
  std::vector<Inequality> ineqs;
  for (const auto& r : f.rays()) ineqs.push_back({r, Rational(support_value(h, r))});
  return LatticePolytope::from_inequalities(f.ambient_dim(), ineqs);
}

namespace {

bool upper_convex(const SupportFunction& h, bool strict) {
  if (!is_complete(h.fan)) throw DomainError("support convexity requires a complete fan");
  std::set<RationalVector> pieces;
  for (const auto& c : h.fan.maximal_cones()) {
    RationalVector hs = linear_piece(h, c);
    pieces.insert(hs);
    for (const auto& r : h.fan.rays()) {
      Rational lhs = rdot(hs, r);
      Rational rhs = Rational(support_value(h, r));
      bool in_sigma = std::find(c.generators().begin(), c.generators().end(), r) != c.generators().end();
      if (lhs > rhs) return false;
      if (strict && !in_sigma && lhs == rhs) return false;
    }
  }
  return !strict || pieces.size() == h.fan.maximal_cones().size();
}

}  // namespace

bool is_upper_convex(const SupportFunction& h) { return upper_convex(h, false); }
bool is_strictly_upper_convex(const SupportFunction& h) { return upper_convex(h, true); }

TDivisor divisor_from_support(const SupportFunction& h) {
  if (h.ray_values.size() != h.fan.rays().size()) throw DomainError("support function has wrong number of ray values");
  return {h.fan, h.ray_values};
}

SupportFunction support_from_divisor(const TDivisor& d) {
  if (d.coefficients.size() != d.fan.rays().size()) throw DomainError("divisor has wrong number of coefficients");
  return {d.fan, d.coefficients};
}

LatticePolytope divisor_polytope(const TDivisor& d) {
  if (d.coefficients.size() != d.fan.rays().size()) throw DomainError("divisor has wrong number of coefficients");
  std::vector<Inequality> ineqs;
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) ineqs.push_back({d.fan.rays()[i], Rational(d.coefficients[i])});
  return LatticePolytope::from_inequalities(d.fan.ambient_dim(), ineqs);
}

std::vector<IntVector> riemann_roch(const TDivisor& d) { return lattice_points(divisor_polytope(d)); }

bool is_cartier(const TDivisor& d) {
  if (d.coefficients.size() != d.fan.rays().size()) throw DomainError("divisor has wrong number of coefficients");
  const std::size_t n = d.fan.ambient_dim();
  for (const auto& c : d.fan.maximal_cones()) {
    if (c.generators().empty()) continue;
    IntVector b;
    for (const auto& g : c.generators()) b.push_back(-d.coefficients[ray_index(d.fan, g)]);
    if (!solve_integer(IntMatrix(c.generators(), n), b)) return false;
  }
  return true;
}

}  // namespace toric
