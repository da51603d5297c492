#pragma once

#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// {x : <x, n> >= 0 for n in normals, <x, e> = 0 for e in equations}.
// Normals are primitive and lie in the linear span of the cone.
struct HalfspaceRep {
  std::vector<IntVector> normals;
  std::vector<IntVector> equations;
};

// Rational polyhedral cone given by generators. On construction the generators are
// made primitive, deduplicated, stripped of redundant members and sorted, so two
// cones are equal exactly when their generator lists are.
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t ambient_dim, const std::vector<IntVector>& generators);
  static Cone zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  std::size_t dim() const { return dim_; }
  const HalfspaceRep& halfspaces() const { return hrep_; }
  bool is_pointed() const { return pointed_; }

  friend bool operator==(const Cone& a, const Cone& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> gens_;
  std::size_t dim_ = 0;
  HalfspaceRep hrep_;
  bool pointed_ = true;
};

constexpr std::size_t kMaxConeDim = 4;

// Generators of the dual cone in the dual-basis coordinates of L*.
Cone dual_cone(const Cone& c);
Cone dual_cone(const Cone& c, const Lattice& l);
// The cone expressed in the coordinates of the lattice basis.
Cone to_lattice_coordinates(const Cone& c, const Lattice& l);

bool in_cone(const IntVector& v, const Cone& c);
bool in_cone(const RationalVector& v, const Cone& c);
bool in_dual_cone(const IntVector& w, const Cone& c);
bool is_strongly_convex(const Cone& c);
bool is_regular(const Cone& c, const Lattice& l);
bool is_regular(const Cone& c);

// All faces, including {0} (or the lineality space) and c itself, sorted by
// dimension and then by generators.
std::vector<Cone> faces(const Cone& c);
bool is_face(const Cone& f, const Cone& c);
std::vector<Cone> facets(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
bool contains(const Cone& big, const Cone& small);

// Simplicial cones (as ray lists) covering a pointed cone.
std::vector<std::vector<IntVector>> triangulate(const Cone& c);

// transform · c = Q>=0[e1, a e1 + b e2], b > 0, 0 <= a < b (a = 0 when b = 1).
struct NormalForm2D {
  Integer a;
  Integer b;
  IntMatrix transform;
};
NormalForm2D normal_form_2d(const Cone& c);

// Generators of S = c* ∩ L*, in dual-basis coordinates.
struct SemigroupGens {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> gens;
};
SemigroupGens hilbert_basis(const Cone& c);
SemigroupGens hilbert_basis(const Cone& c, const Lattice& l);

// Splitting L* = F ⊕ K where K = c^⊥ ∩ L*. reduced is c expressed through the
// coordinates <x, f_i>; it is full-dimensional in Z^k.
struct LinealitySplit {
  std::vector<IntVector> complement;  // f_1..f_k
  std::vector<IntVector> lineality;   // basis of c^⊥ ∩ L*
  Cone reduced;
};
LinealitySplit split_lineality(const Cone& c);

// Diagnostic for the conjectured candidate bound: every Hilbert basis element has
// sup-norm at most the largest sup-norm of a dual ray.
bool check_conjecture_G(const Cone& c);

}  // namespace toric
