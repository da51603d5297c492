#pragma once

#include <vector>

#include "toric/fan.hpp"

namespace toric {

// <x, normal> >= -offset.
struct Inequality {
  IntVector normal;
  Rational offset;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// Bounded rational polytope, ambient dimension <= 3. Either representation may be
// given; vertices are always computed and kept sorted.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  static LatticePolytope from_inequalities(std::size_t n, std::vector<Inequality> ineqs);
  static LatticePolytope from_vertices(std::size_t n, const std::vector<RationalVector>& vertices);
  static LatticePolytope from_vertices(std::size_t n, const std::vector<IntVector>& vertices);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Inequality>& inequalities() const { return ineqs_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  bool is_empty() const { return vertices_.empty(); }
  std::size_t dim() const;  // affine dimension; 0 for points and the empty polytope
  bool contains(const RationalVector& x) const;
  bool contains(const IntVector& x) const;

  // Same point set (compares vertex lists).
  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Inequality> ineqs_;
  std::vector<RationalVector> vertices_;
};

// Facets of a full-dimensional polytope: primitive inward normals, sorted.
std::vector<Inequality> facets(const LatticePolytope& p);
Rational area(const LatticePolytope& p);  // 2D only
std::vector<IntVector> lattice_points(const LatticePolytope& p);

// Values on Fan::rays(), index-aligned.
struct SupportFunction {
  Fan fan;
  std::vector<Integer> ray_values;
};
struct TDivisor {
  Fan fan;
  std::vector<Integer> coefficients;
};

Integer support_value(const SupportFunction& h, const IntVector& ray);
// h_sigma with <n, h_sigma> = h(n) on the rays of sigma; throws if h is not linear on sigma.
RationalVector linear_piece(const SupportFunction& h, const Cone& sigma);

Fan fan_from_polytope(const LatticePolytope& p);
SupportFunction support_from_polytope(const LatticePolytope& p, const Fan& f);
LatticePolytope polytope_from_support(const Fan& f, const SupportFunction& h);
bool is_upper_convex(const SupportFunction& h);
bool is_strictly_upper_convex(const SupportFunction& h);

TDivisor divisor_from_support(const SupportFunction& h);
SupportFunction support_from_divisor(const TDivisor& d);
LatticePolytope divisor_polytope(const TDivisor& d);
// Exponent vectors of the monomial basis of L(D), lexicographically ascending.
std::vector<IntVector> riemann_roch(const TDivisor& d);
bool is_cartier(const TDivisor& d);

}  // namespace toric
