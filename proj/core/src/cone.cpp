#include "toric/cone.hpp"

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

// Primitive normal of the hyperplane spanned by n-1 independent rows (generalized cross product).
IntVector hyperplane_normal(const std::vector<IntVector>& rows, std::size_t n) {
  IntVector a(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<IntVector> minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      IntVector m;
      m.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) m.push_back(r[c]);
      minor.push_back(std::move(m));
    }
    Integer d = determinant(IntMatrix(std::move(minor), n - 1));
    a[j] = (j % 2 == 0) ? d : Integer(-d);
  }
  return primitive(a);
}

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct RawHrep {
  HalfspaceRep rep;
  std::size_t dim = 0;
};

RawHrep compute_hrep(std::size_t n, const std::vector<IntVector>& gens) {
  RawHrep out;
  IntMatrix eq = integer_kernel_basis(IntMatrix(gens, n));
  out.rep.equations = eq.rows();
  out.dim = n - eq.nrows();
  if (out.dim == 0) return out;
  std::set<IntVector> normals;
  for_each_subset(gens.size(), out.dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> rows;
    for (auto i : idx) rows.push_back(gens[i]);
    for (const auto& e : eq.rows()) rows.push_back(e);
    if (rank(rows, n) != n - 1) return;
    IntVector a = hyperplane_normal(rows, n);
    bool pos = false, negv = false;
    for (const auto& g : gens) {
      int s = sign(dot(g, a));
      if (s > 0) pos = true;
      if (s < 0) negv = true;
    }
    if (pos && negv) return;
    normals.insert(negv ? neg(a) : a);
  });
  out.rep.normals.assign(normals.begin(), normals.end());
  return out;
}

bool satisfies(const IntVector& v, const HalfspaceRep& h) {
  for (const auto& e : h.equations)
    if (dot(v, e) != 0) return false;
  for (const auto& a : h.normals)
    if (dot(v, a) < 0) return false;
  return true;
}

std::vector<std::size_t> tight(const std::vector<IntVector>& gens, const IntVector& a) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (dot(gens[i], a) == 0) t.push_back(i);
  return t;
}

std::vector<IntVector> integer_inverse(const IntMatrix& m) {
  auto inv = rational_inverse(m);
  std::vector<IntVector> r(inv.size(), IntVector(inv.size()));
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = 0; j < inv.size(); ++j) {
      if (boost::multiprecision::denominator(inv[i][j]) != 1)
        throw DomainError("matrix is not unimodular");
      r[i][j] = boost::multiprecision::numerator(inv[i][j]);
    }
  return r;
}

void require_full_pointed(const Cone& c, const char* what) {
  if (!c.is_pointed()) throw DomainError(std::string(what) + ": cone is not strongly convex");
}

// Lattice points of the half-open parallelepiped spanned by the rows of t.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& t) {
  const std::size_t n = t.size();
  IntMatrix tm(t, n);
  SmithForm sf = smith_normal_form(tm);
  auto vinv = integer_inverse(sf.v);
  auto tinv = rational_inverse(tm);
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = sf.s(i, i);
  std::vector<IntVector> out;
  IntVector c(n);
  for (;;) {
    IntVector p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[j] += c[i] * vinv[i][j];
    for (std::size_t i = 0; i < n; ++i) {
      Rational lambda = 0;
      for (std::size_t j = 0; j < n; ++j) lambda += Rational(p[j]) * tinv[j][i];
      Integer f = floor(lambda);
      if (f != 0) p = sub(p, scale(f, t[i]));
    }
    out.push_back(p);
    std::size_t k = 0;
    while (k < n) {
      if (++c[k] < d[k]) break;
      c[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

std::vector<IntVector> irreducibles(const std::vector<IntVector>& cand, const Cone& c) {
  std::vector<IntVector> hb;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == x) continue;
      if (in_dual_cone(sub(x, y), c)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.push_back(x);
  }
  return hb;
}

std::vector<IntVector> hilbert_basis_2d(const Cone& c) {
  Cone d = dual_cone(c);
  const IntVector& first = c.generators().front();
  IntVector start = d.generators()[0], end = d.generators()[1];
  if (dot(first, start) != 0) std::swap(start, end);
  const Integer delta = det2(start, end);
  const int s = sign(delta);
  const Integer adelta = abs(delta);
  Integer lo[2], hi[2];
  for (int k = 0; k < 2; ++k) {
    lo[k] = std::min({Integer(0), start[k], end[k]});
    hi[k] = std::max({Integer(0), start[k], end[k]});
  }
  std::vector<IntVector> cand;
  for (Integer x = lo[0]; x <= hi[0]; ++x)
    for (Integer y = lo[1]; y <= hi[1]; ++y) {
      IntVector p{x, y};
      if (x == 0 && y == 0) continue;
      Integer l1 = s * det2(p, end), l2 = s * det2(start, p);
      if (l1 >= 0 && l2 >= 0 && l1 + l2 <= adelta) cand.push_back(p);
    }
  auto hb = irreducibles(cand, c);
  std::sort(hb.begin(), hb.end(), [&](const IntVector& p, const IntVector& q) { return s * det2(p, q) > 0; });
  return hb;
}

std::vector<IntVector> hilbert_basis_simplicial_cover(const Cone& c) {
  Cone d = dual_cone(c);
  std::set<IntVector> cand(d.generators().begin(), d.generators().end());
  for (const auto& simplex : triangulate(d))
    for (auto& p : parallelepiped_points(simplex))
      if (!is_zero(p)) cand.insert(p);
  std::vector<IntVector> cv(cand.begin(), cand.end());
  return irreducibles(cv, c);
}

std::vector<IntVector> hilbert_basis_full(const Cone& c) {
  const std::size_t n = c.ambient_dim();
  if (n == 0) return {};
  if (n == 1) return dual_cone(c).generators();
  if (n == 2) return hilbert_basis_2d(c);
  return hilbert_basis_simplicial_cover(c);
}

}  // namespace

bool operator<(const Cone& a, const Cone& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.gens_ < b.gens_;
}

Cone::Cone(std::size_t ambient_dim, const std::vector<IntVector>& generators) : n_(ambient_dim) {
  if (n_ > kMaxConeDim)
    throw UnsupportedDimension("cones of ambient dimension " + std::to_string(n_) + " > " +
                               std::to_string(kMaxConeDim) + " are not supported");
  std::set<IntVector> uniq;
  for (const auto& g : generators) {
    if (g.size() != n_) throw DomainError("generator " + to_string(g) + " has wrong dimension");
    if (is_zero(g)) continue;
    uniq.insert(primitive(g));
  }
  std::vector<IntVector> gens(uniq.begin(), uniq.end());
  RawHrep raw = compute_hrep(n_, gens);
  dim_ = raw.dim;
  hrep_ = raw.rep;

  pointed_ = true;
  for (const auto& g : gens) {
    bool all_tight = true;
    for (const auto& a : hrep_.normals)
      if (dot(g, a) != 0) {
        all_tight = false;
        break;
      }
    if (all_tight) {
      pointed_ = false;
      break;
    }
  }

  if (pointed_) {
    std::vector<IntVector> kept;
    for (const auto& g : gens) {
      std::vector<IntVector> rows = hrep_.equations;
      for (const auto& a : hrep_.normals)
        if (dot(g, a) == 0) rows.push_back(a);
      if (rank(rows, n_) == n_ - 1) kept.push_back(g);
    }
    gens = std::move(kept);
  } else {
    for (std::size_t i = gens.size(); i-- > 0;) {
      std::vector<IntVector> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      if (satisfies(gens[i], compute_hrep(n_, others).rep)) gens = std::move(others);
    }
  }
  gens_ = std::move(gens);
}

Cone Cone::zero(std::size_t ambient_dim) { return Cone(ambient_dim, {}); }

Cone dual_cone(const Cone& c) {
  std::vector<IntVector> g = c.halfspaces().normals;
  for (const auto& e : c.halfspaces().equations) {
    g.push_back(e);
    g.push_back(neg(e));
  }
  return Cone(c.ambient_dim(), g);
}

Cone to_lattice_coordinates(const Cone& c, const Lattice& l) {
  if (l.degree() != c.ambient_dim()) throw DomainError("lattice degree does not match cone dimension");
  if (l.is_standard()) return c;
  std::vector<IntVector> g;
  for (const auto& v : c.generators()) g.push_back(clear_denominators(l.coordinates(v)));
  return Cone(l.rank(), g);
}

Cone dual_cone(const Cone& c, const Lattice& l) { return dual_cone(to_lattice_coordinates(c, l)); }

bool in_cone(const IntVector& v, const Cone& c) {
  if (v.size() != c.ambient_dim()) throw DomainError("in_cone: dimension mismatch");
  return satisfies(v, c.halfspaces());
}

bool in_cone(const RationalVector& v, const Cone& c) {
  if (v.size() != c.ambient_dim()) throw DomainError("in_cone: dimension mismatch");
  return in_cone(clear_denominators(v), c);
}

bool in_dual_cone(const IntVector& w, const Cone& c) {
  if (w.size() != c.ambient_dim()) throw DomainError("in_dual_cone: dimension mismatch");
  for (const auto& g : c.generators())
    if (dot(g, w) < 0) return false;
  return true;
}

bool is_strongly_convex(const Cone& c) { return c.is_pointed(); }

bool is_regular(const Cone& c, const Lattice& l) { return is_regular(to_lattice_coordinates(c, l)); }

bool is_regular(const Cone& c) {
  require_full_pointed(c, "is_regular");
  if (c.generators().size() != c.dim()) return false;
  if (c.generators().empty()) return true;
  SmithForm sf = smith_normal_form(IntMatrix(c.generators(), c.ambient_dim()));
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (sf.s(i, i) != 1) return false;
  return true;
}

std::vector<Cone> faces(const Cone& c) {
  const auto& gens = c.generators();
  std::vector<std::vector<std::size_t>> tights;
  for (const auto& a : c.halfspaces().normals) tights.push_back(tight(gens, a));
  std::vector<std::size_t> all(gens.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& t : tights) {
      std::vector<std::size_t> s;
      std::set_intersection(queue[q].begin(), queue[q].end(), t.begin(), t.end(), std::back_inserter(s));
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  std::set<Cone> out;
  for (const auto& s : queue) {
    std::vector<IntVector> g;
    for (auto i : s) g.push_back(gens[i]);
    out.insert(Cone(c.ambient_dim(), g));
  }
  std::vector<Cone> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), cone_order);
  return v;
}

std::vector<Cone> facets(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& a : c.halfspaces().normals) {
    std::vector<IntVector> g;
    for (const auto& v : c.generators())
      if (dot(v, a) == 0) g.push_back(v);
    out.emplace_back(c.ambient_dim(), g);
  }
  std::sort(out.begin(), out.end(), cone_order);
  return out;
}

bool is_face(const Cone& f, const Cone& c) {
  if (f.ambient_dim() != c.ambient_dim()) return false;
  for (const auto& x : faces(c))
    if (x == f) return true;
  return false;
}

bool contains(const Cone& big, const Cone& small) {
  for (const auto& g : small.generators())
    if (!in_cone(g, big)) return false;
  return true;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("intersect: dimension mismatch");
  std::vector<IntVector> rows;
  for (const Cone* c : {&a, &b}) {
    for (const auto& x : c->halfspaces().normals) rows.push_back(x);
    for (const auto& e : c->halfspaces().equations) {
      rows.push_back(e);
      rows.push_back(neg(e));
    }
  }
  return dual_cone(Cone(a.ambient_dim(), rows));
}

std::vector<std::vector<IntVector>> triangulate(const Cone& c) {
  require_full_pointed(c, "triangulate");
  const auto& gens = c.generators();
  if (gens.size() == c.dim()) return {gens};
  const IntVector& apex = gens.front();
  std::vector<std::vector<IntVector>> out;
  for (const auto& a : c.halfspaces().normals) {
    if (dot(apex, a) == 0) continue;
    std::vector<IntVector> fg;
    for (const auto& v : gens)
      if (dot(v, a) == 0) fg.push_back(v);
    for (auto s : triangulate(Cone(c.ambient_dim(), fg))) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

NormalForm2D normal_form_2d(const Cone& c) {
  if (c.ambient_dim() != 2 || c.dim() != 2) throw DomainError("normal_form_2d: cone must be 2-dimensional in Z^2");
  require_full_pointed(c, "normal_form_2d");
  const IntVector& v1 = c.generators()[0];
  const IntVector& v2 = c.generators()[1];
  Integer x, y;
  ext_gcd(v1[0], v1[1], x, y);
  IntMatrix g = IntMatrix(std::vector<IntVector>{{x, y}, {-v1[1], v1[0]}});
  IntVector w = g * v2;
  if (w[1] < 0) {
    g = make_matrix({{1, 0}, {0, -1}}) * g;
    w[1] = -w[1];
  }
  Integer q = floor_div(w[0], w[1]);
  IntMatrix shear(std::vector<IntVector>{{Integer(1), Integer(-q)}, {Integer(0), Integer(1)}});
  return {w[0] - q * w[1], w[1], shear * g};
}

LinealitySplit split_lineality(const Cone& c) {
  require_full_pointed(c, "split_lineality");
  const std::size_t n = c.ambient_dim();
  LinealitySplit out;
  if (c.dim() == n) {
    out.complement = IntMatrix::identity(n).rows();
    out.reduced = c;
    return out;
  }
  IntMatrix k = integer_kernel_basis(IntMatrix(c.generators(), n));
  out.lineality = k.rows();
  SmithForm sf = smith_normal_form(k);
  auto vinv = integer_inverse(sf.v);
  for (std::size_t i = k.nrows(); i < n; ++i) out.complement.push_back(vinv[i]);
  std::vector<IntVector> red;
  for (const auto& g : c.generators()) {
    IntVector r;
    for (const auto& f : out.complement) r.push_back(dot(g, f));
    red.push_back(r);
  }
  out.reduced = Cone(out.complement.size(), red);
  return out;
}

SemigroupGens hilbert_basis(const Cone& c) {
  const std::size_t n = c.ambient_dim();
  if (n > 3) throw UnsupportedDimension("hilbert_basis supports ambient dimension <= 3");
  require_full_pointed(c, "hilbert_basis");
  SemigroupGens out{n, {}};
  if (c.dim() == n) {
    out.gens = hilbert_basis_full(c);
    return out;
  }
  LinealitySplit sp = split_lineality(c);
  for (const auto& a : hilbert_basis_full(sp.reduced)) {
    IntVector u(n);
    for (std::size_t i = 0; i < a.size(); ++i) u = add(u, scale(a[i], sp.complement[i]));
    out.gens.push_back(u);
  }
  for (const auto& k : sp.lineality) {
    out.gens.push_back(k);
    out.gens.push_back(neg(k));
  }
  return out;
}

SemigroupGens hilbert_basis(const Cone& c, const Lattice& l) { return hilbert_basis(to_lattice_coordinates(c, l)); }

bool check_conjecture_G(const Cone& c) {
  Integer bound = 0;
  Cone d = dual_cone(c);
  for (const auto& r : d.generators()) bound = std::max(bound, abs_max(r));
  SemigroupGens hb = hilbert_basis(c);
  for (const auto& h : hb.gens)
    if (abs_max(h) > bound) return false;
  return true;
}

}  // namespace toric
