#include "toric/resolution.hpp"

namespace toric {

Refinement2D refine_to_regular(const Cone& c) {
  if (c.ambient_dim() != 2 || c.dim() != 2 || !c.is_pointed())
    throw DomainError("refine_to_regular: expected a 2-dimensional strongly convex cone in Z^2");
  Refinement2D r;
  r.original = c;
  IntVector u = c.generators()[0];
  const IntVector& w = c.generators()[1];
  r.rays.push_back(u);
  for (;;) {
    Integer d = det2(u, w);
    if (abs(d) == 1) break;
    const int s = sign(d);
    Integer x, y;
    // det(u, p) = u0 p1 - u1 p0 = s
    ext_gcd(u[0], u[1], x, y);
    IntVector p0{-Integer(s) * y, Integer(s) * x};
    Integer t = ceil_div(-s * det2(p0, w), abs(d));
    IntVector p = add(p0, scale(t, u));
    r.inserted_rays.push_back(p);
    r.rays.push_back(p);
    u = p;
  }
  r.rays.push_back(w);
  for (std::size_t i = 0; i + 1 < r.rays.size(); ++i) r.subcones.emplace_back(2, std::vector<IntVector>{r.rays[i], r.rays[i + 1]});
  return r;
}

ResolutionMap resolution_map(const Refinement2D& r, const Lattice& l) {
  if (!l.is_standard() && l.rank() != 2) throw DomainError("resolution_map: lattice must have rank 2");
  ResolutionMap m;
  m.original = to_lattice_coordinates(r.original, l);
  m.target = hilbert_basis(m.original);
  m.torus_chart = {2, m.target.gens};
  for (const auto& sub : r.subcones) {
    Cone tau = to_lattice_coordinates(sub, l);
    if (!is_regular(tau)) throw DomainError("resolution_map: subcone is not regular");
    ResolutionPatch p;
    p.subcone = tau;
    p.chart_basis = hilbert_basis(tau).gens;
    p.map.source_dim = 2;
    IntMatrix bt = IntMatrix(p.chart_basis, 2).transpose();
    for (const auto& u : m.target.gens) {
      auto a = solve_integer(bt, u);
      if (!a || (*a)[0] < 0 || (*a)[1] < 0)
        throw DomainError("resolution_map: generator " + to_string(u) + " has negative chart coordinates");
      p.map.exponents.push_back(*a);
    }
    m.patches.push_back(std::move(p));
  }
  return m;
}

Desingularization desing_affine_toric_variety(const Cone& c, const Lattice& l) {
  Desingularization d;
  Cone local = to_lattice_coordinates(c, l);
  d.variety = affine_toric_variety(local, Lattice::standard(local.ambient_dim()));
  d.refinement = refine_to_regular(local);
  d.map = resolution_map(d.refinement, Lattice::standard(2));
  return d;
}

bool is_birational(const MonomialMap& m) {
  if (m.exponents.empty()) return m.source_dim == 0;
  return same_lattice(IntMatrix(m.exponents, m.source_dim), IntMatrix::identity(m.source_dim));
}

}  // namespace toric
