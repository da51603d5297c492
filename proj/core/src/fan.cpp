#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

bool cone_order(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a < b;
}

std::string gap_list(const std::vector<IntVector>& gens) {
  std::string s = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + to_string(gens[i]);
  return s + "]";
}

IntVector image(const IntMatrix& m, const IntVector& v) { return m * v; }

Cone image(const IntMatrix& m, const Cone& c) {
  std::vector<IntVector> g;
  for (const auto& v : c.generators()) g.push_back(image(m, v));
  return Cone(m.nrows(), g);
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Counter-clockwise angular order starting at the positive x-axis.
bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b) > 0;
}

bool is_unimodular(const IntMatrix& m) {
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

std::size_t Fan::index(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c, cone_order);
  if (it == cones_.end() || !(*it == c)) throw DomainError("cone " + gap_list(c.generators()) + " is not in the fan");
  return static_cast<std::size_t>(it - cones_.begin());
}

bool Fan::contains(const Cone& c) const {
  if (c.ambient_dim() != n_) return false;
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c, cone_order);
  return it != cones_.end() && *it == c;
}

const std::vector<IntVector>& Fan::display(const Cone& c) const { return display_[index(c)]; }

bool Fan::is_listed(const Cone& c) const { return listed_[index(c)]; }

Fan validate_fan(std::size_t n, const std::vector<std::vector<IntVector>>& raw) {
  if (n > kMaxConeDim) throw UnsupportedDimension("fans in dimension > " + std::to_string(kMaxConeDim) + " are not supported");
  Fan f;
  f.n_ = n;
  std::vector<std::vector<IntVector>> listed_raw;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Cone c(n, raw[i]);
    if (!c.is_pointed()) throw DomainError("cone " + std::to_string(i + 1) + " " + gap_list(raw[i]) + " is not strongly convex");
    if (std::find(f.listed_order_.begin(), f.listed_order_.end(), c) != f.listed_order_.end()) continue;
    f.listed_order_.push_back(c);
    listed_raw.push_back(raw[i]);
  }
  const auto& listed = f.listed_order_;
  for (std::size_t i = 0; i < listed.size(); ++i)
    for (std::size_t j = i + 1; j < listed.size(); ++j) {
      Cone x = intersect(listed[i], listed[j]);
      if (!is_face(x, listed[i]) || !is_face(x, listed[j]))
        throw DomainError("cones " + gap_list(listed_raw[i]) + " and " + gap_list(listed_raw[j]) + " intersect in " +
                          gap_list(x.generators()) + ", which is not a face of both");
    }

  std::set<Cone> all;
  if (listed.empty()) all.insert(Cone::zero(n));
  for (const auto& c : listed)
    for (auto& x : faces(c)) all.insert(std::move(x));
  f.cones_.assign(all.begin(), all.end());
  std::sort(f.cones_.begin(), f.cones_.end(), cone_order);

  f.display_.resize(f.cones_.size());
  f.listed_.assign(f.cones_.size(), false);
  for (std::size_t i = 0; i < listed.size(); ++i) {
    std::size_t k = f.index(listed[i]);
    f.listed_[k] = true;
    f.display_[k] = listed_raw[i];
  }
  for (std::size_t k = 0; k < f.cones_.size(); ++k) {
    if (f.listed_[k]) continue;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (!is_face(f.cones_[k], listed[i])) continue;
      std::vector<IntVector> d;
      for (const auto& g : listed_raw[i])
        if (!is_zero(g) && in_cone(g, f.cones_[k])) d.push_back(g);
      std::sort(d.begin(), d.end());
      f.display_[k] = std::move(d);
      break;
    }
  }

  for (const auto& c : listed) {
    bool proper_face = false;
    for (const auto& o : listed)
      if (!(o == c) && is_face(c, o)) proper_face = true;
    if (!proper_face) f.maximal_.push_back(c);
  }
  std::set<IntVector> seen;
  for (const auto& r : listed_raw)
    for (const auto& g : r) {
      if (is_zero(g)) continue;
      IntVector p = primitive(g);
      if (f.contains(Cone(n, {p})) && seen.insert(p).second) f.rays_.push_back(p);
    }
  return f;
}

Fan validate_fan(std::size_t n, const std::vector<Cone>& cones) {
  std::vector<std::vector<IntVector>> raw;
  for (const auto& c : cones) {
    if (c.ambient_dim() != n) throw DomainError("cone dimension does not match the fan");
    raw.push_back(c.generators());
  }
  return validate_fan(n, raw);
}

bool is_complete(const Fan& f) {
  const std::size_t n = f.ambient_dim();
  if (n > 3) throw UnsupportedDimension("is_complete supports dimension <= 3");
  if (n == 0) return true;
  if (n == 1) {
    return f.contains(Cone(1, {make_vector({1})})) && f.contains(Cone(1, {make_vector({-1})}));
  }
  if (n == 2) {
    std::vector<IntVector> rays = f.rays();
    if (rays.size() < 3) return false;
    std::sort(rays.begin(), rays.end(), angle_less);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const IntVector& a = rays[i];
      const IntVector& b = rays[(i + 1) % rays.size()];
      if (det2(a, b) <= 0 || !f.contains(Cone(2, {a, b}))) return false;
    }
    return true;
  }
  if (f.maximal_cones().empty()) return false;
  std::map<Cone, int> walls;
  for (const auto& c : f.maximal_cones()) {
    if (c.dim() != 3) return false;
    for (const auto& w : facets(c)) ++walls[w];
  }
  for (const auto& [w, k] : walls)
    if (k != 2) return false;
  return true;
}

bool is_smooth(const Fan& f) {
  for (const auto& c : f.maximal_cones())
    if (!is_regular(c)) return false;
  return true;
}

std::size_t number_of_cones_dim(const Fan& f, std::size_t k) {
  return static_cast<std::size_t>(
      std::count_if(f.cones().begin(), f.cones().end(), [&](const Cone& c) { return c.dim() == k; }));
}

Star star(const Cone& sigma, const Fan& f) {
  if (!f.contains(sigma)) throw DomainError("star: cone " + gap_list(sigma.generators()) + " is not in the fan");
  const std::size_t n = f.ambient_dim();
  const std::size_t r = sigma.dim();
  Star s;

  std::vector<Cone> containing;
  for (const auto& c : f.cones())
    if (is_face(sigma, c)) containing.push_back(c);
  for (std::size_t d = r; d <= n; ++d) {
    std::vector<std::vector<IntVector>> derived;
    for (const auto& c : containing)
      if (c.dim() == d && !f.is_listed(c)) derived.push_back(f.display(c));
    std::sort(derived.begin(), derived.end());
    for (auto& x : derived) s.raw.push_back(std::move(x));
    for (const auto& c : f.listed_cones())
      if (c.dim() == d && is_face(sigma, c)) s.raw.push_back(f.display(c));
  }

  IntMatrix v = IntMatrix::identity(n);
  if (r > 0) v = smith_normal_form(IntMatrix(sigma.generators(), n)).v;
  s.projection = IntMatrix(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - r; ++j) s.projection(i, j) = v(i, r + j);
  IntMatrix pt = s.projection.transpose();
  for (const auto& c : containing) s.cones.push_back(image(pt, c));
  s.projected = validate_fan(n - r, s.cones);
  return s;
}

Integer betti_number(const Fan& f, std::size_t k, std::string* warning) {
  const std::size_t n = f.ambient_dim();
  if (warning) {
    bool ok = is_smooth(f);
    if (ok && n <= 3) ok = is_complete(f);
    if (!ok) *warning = "betti_number: the fan is not smooth and complete, the cone-count formula need not give Betti numbers";
  }
  if (k % 2 == 1) return 0;
  const std::size_t m = k / 2;
  Integer b = 0;
  for (std::size_t j = m; j <= n; ++j) {
    Integer term = binomial(j, m) * Integer(number_of_cones_dim(f, n - j));
    b += ((j - m) % 2 == 0) ? term : Integer(-term);
  }
  return b;
}

Integer euler_characteristic(const Fan& f) { return Integer(number_of_cones_dim(f, f.ambient_dim())); }

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;
  while (q % p == 0) q /= p;
  return q == 1;
}

Integer cardinality_of_X(const Fan& f, std::int64_t q) {
  if (!is_prime_power(q)) throw DomainError("cardinality_of_X: q = " + std::to_string(q) + " is not a prime power");
  const std::size_t n = f.ambient_dim();
  Integer total = 0, power = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    total += power * Integer(number_of_cones_dim(f, n - k));
    power *= (q - 1);
  }
  return total;
}

FanMorphismResult is_fan_morphism(const IntMatrix& m, const Fan& source, const Fan& target) {
  if (m.ncols() != source.ambient_dim() || m.nrows() != target.ambient_dim())
    throw DomainError("is_fan_morphism: matrix shape does not match the fans");
  FanMorphismResult res;
  FanMorphism fm{m, source, target, {}};
  for (const auto& c : source.cones()) {
    Cone img = image(m, c);
    const Cone* hit = nullptr;
    for (const auto& t : target.cones())
      if (contains(t, img)) {
        hit = &t;
        break;
      }
    if (!hit) {
      res.failing_cone = c;
      return res;
    }
    fm.cone_assignment.emplace_back(c, *hit);
  }
  res.morphism = std::move(fm);
  return res;
}

Fan apply(const IntMatrix& g, const Fan& f) {
  std::vector<Cone> cs;
  for (const auto& c : f.listed_cones()) cs.push_back(image(g, c));
  return validate_fan(f.ambient_dim(), cs);
}

FanAutomorphismGroup fan_automorphism_group(const Fan& f) {
  const std::size_t n = f.ambient_dim();
  if (n > 3) throw UnsupportedDimension("fan_automorphism_group supports dimension <= 3");
  const auto& rays = f.rays();
  if (rank(rays, n) != n) throw DomainError("fan rays do not span the lattice; the automorphism group may be infinite");

  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < rays.size() && basis.size() < n; ++i) {
    std::vector<IntVector> cand;
    for (auto b : basis) cand.push_back(rays[b]);
    cand.push_back(rays[i]);
    if (rank(cand, n) == cand.size()) basis.push_back(i);
  }
  IntMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) b(i, j) = rays[basis[j]][i];
  auto binv = rational_inverse(b);

  std::set<IntVector> ray_set(rays.begin(), rays.end());
  std::set<Cone> maximal(f.maximal_cones().begin(), f.maximal_cones().end());
  std::set<std::vector<IntVector>> found;

  std::vector<std::size_t> pick(n);
  std::vector<bool> used(rays.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n) {
      IntMatrix g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rational x = 0;
          for (std::size_t k = 0; k < n; ++k) x += Rational(rays[pick[k]][i]) * binv[k][j];
          if (boost::multiprecision::denominator(x) != 1) return;
          g(i, j) = boost::multiprecision::numerator(x);
        }
      if (!is_unimodular(g)) return;
      for (const auto& r : rays)
        if (!ray_set.count(image(g, r))) return;
      for (const auto& c : maximal)
        if (!maximal.count(image(g, c))) return;
      found.insert(g.rows());
      return;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      pick[depth] = i;
      rec(depth + 1);
      used[i] = false;
    }
  };
  rec(0);

  FanAutomorphismGroup grp;
  for (const auto& rows : found) grp.elements.emplace_back(rows, n);
  for (const auto& x : grp.elements)
    for (const auto& y : grp.elements)
      if (!found.count((x * y).rows())) throw DomainError("fan_automorphism_group: candidate set is not closed");
  return grp;
}

namespace {

// Nonnegative a with Σ a_i h_i = c minimizing Σ a_i; first in lexicographic search order.
std::optional<IntVector> semigroup_coordinates(const IntVector& c, const std::vector<IntVector>& h, const IntVector& w) {
  const std::size_t m = h.size();
  std::vector<Integer> weight(m);
  for (std::size_t i = 0; i < m; ++i) weight[i] = dot(h[i], w);
  std::optional<IntVector> best;
  Integer best_total = -1;
  IntVector cur(m);
  std::function<void(std::size_t, const IntVector&, const Integer&)> rec = [&](std::size_t i, const IntVector& rest,
                                                                                const Integer& total) {
    if (best && total >= best_total) return;
    if (is_zero(rest)) {
      best = cur;
      best_total = total;
      return;
    }
    if (i == m) return;
    Integer budget = dot(rest, w);
    if (budget < 0) return;
    Integer top = budget / weight[i];
    for (Integer a = top; a >= 0; --a) {
      cur[i] = a;
      rec(i + 1, sub(rest, scale(a, h[i])), total + a);
    }
    cur[i] = 0;
  };
  rec(0, c, 0);
  return best;
}

}  // namespace

std::pair<MonomialMap, MonomialMap> gluing_map(const Cone& tau, const Cone& sigma1, const Cone& sigma2,
                                               const Lattice& l) {
  Cone t = to_lattice_coordinates(tau, l);
  Cone s[2] = {to_lattice_coordinates(sigma1, l), to_lattice_coordinates(sigma2, l)};
  if (!is_face(t, s[0]) || !is_face(t, s[1])) throw DomainError("gluing_map: tau is not a face of both cones");
  const std::size_t n = t.ambient_dim();
  LinealitySplit sp = split_lineality(t);
  const std::vector<IntVector> hb = hilbert_basis(sp.reduced).gens;
  const std::size_t k = sp.complement.size();
  IntVector w(k);
  for (const auto& g : sp.reduced.generators()) w = add(w, g);

  std::vector<IntVector> basis = sp.complement;
  basis.insert(basis.end(), sp.lineality.begin(), sp.lineality.end());
  IntMatrix bt = IntMatrix(basis, n).transpose();

  MonomialMap out[2];
  for (int side = 0; side < 2; ++side) {
    out[side].source_dim = hb.size() + sp.lineality.size();
    for (const auto& u : hilbert_basis(s[side]).gens) {
      auto coords = solve_rational(bt, to_rational(u));
      if (!coords) throw DomainError("gluing_map: generator outside the lattice");
      IntVector c(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (boost::multiprecision::denominator((*coords)[i]) != 1) throw DomainError("gluing_map: non-integral coordinates");
        c[i] = boost::multiprecision::numerator((*coords)[i]);
      }
      IntVector pointed(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
      auto a = semigroup_coordinates(pointed, hb, w);
      if (!a) throw DomainError("gluing_map: generator of S_sigma is not in S_tau");
      IntVector e = *a;
      e.insert(e.end(), c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
      out[side].exponents.push_back(std::move(e));
    }
  }
  return {out[0], out[1]};
}

}  // namespace toric
