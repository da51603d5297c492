#pragma once

#include <optional>

#include "toric/arith.hpp"

namespace toric {

// Row-style Hermite normal form: u·m = h, u unimodular, h in row echelon form
// with positive pivots and the entries above each pivot reduced into [0, pivot).
// Zero rows are moved to the bottom.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

// u·m·v = s with s diagonal, d1 | d2 | ..., all nonnegative.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Rows form a basis (in Hermite form) of {x in Z^ncols : m·x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t ncols);
Integer determinant(const IntMatrix& m);

// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
IntMatrix lattice_basis(const IntMatrix& m);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);
bool in_row_lattice(const IntVector& v, const IntMatrix& m);

// Solutions of a·x = b.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);
std::optional<RationalVector> solve_rational(const IntMatrix& a, const RationalVector& b);
std::vector<RationalVector> rational_inverse(const IntMatrix& m);

class Lattice {
 public:
  explicit Lattice(IntMatrix basis);
  static Lattice standard(std::size_t n);

  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.nrows(); }
  std::size_t degree() const { return basis_.ncols(); }
  bool is_standard() const;

  // Coordinates of an ambient vector of L ⊗ Q with respect to the basis.
  RationalVector coordinates(const IntVector& v) const;

 private:
  IntMatrix basis_;
};

// rescaled_basis / denominator is a basis of L*; denominator is minimal.
struct DualLatticeData {
  IntMatrix rescaled_basis;
  Integer denominator;
};
DualLatticeData dual_lattice(const Lattice& l);

IntVector primitive(const IntVector& v);

// Lagrange-Gauss reduced basis of a rank-2 lattice. Ties in the size reduction round
// down, and each vector is signed so its first nonzero entry is positive.
IntMatrix reduce_rank2(const IntMatrix& basis);

}  // namespace toric
