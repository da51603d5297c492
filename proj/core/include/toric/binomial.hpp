#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

// y^lhs - y^rhs with disjoint supports.
class Binomial {
 public:
  Binomial() = default;
  Binomial(IntVector lhs, IntVector rhs);
  // Splits a nonzero exponent difference into positive and negative parts.
  static Binomial from_difference(const IntVector& diff);

  const IntVector& lhs() const { return lhs_; }
  const IntVector& rhs() const { return rhs_; }
  std::size_t num_vars() const { return lhs_.size(); }
  IntVector difference() const { return sub(lhs_, rhs_); }

  friend bool operator==(const Binomial&, const Binomial&) = default;

 private:
  IntVector lhs_;
  IntVector rhs_;
};

struct BinomialIdeal {
  std::size_t num_vars = 0;
  std::vector<Binomial> generators;
};

// x ↦ (x^{e_1}, ..., x^{e_t}) with Laurent exponents e_i ∈ Z^source_dim.
struct MonomialMap {
  std::size_t source_dim = 0;
  std::vector<IntVector> exponents;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

struct AffineToricVariety {
  Cone cone;
  SemigroupGens semigroup;
  BinomialIdeal ideal;
  MonomialMap embedding;
};

// Generators of the lattice ideal of ker(U), U having the semigroup generators as
// columns, saturated by the product of all variables. A 2D Hilbert basis gets its
// known quadric-type generators directly; everything else goes through Buchberger.
BinomialIdeal toric_ideal(const SemigroupGens& gens);
MonomialMap torus_embedding(const Cone& c, const Lattice& l);
AffineToricVariety affine_toric_variety(const Cone& c, const Lattice& l);
BinomialIdeal create_torus(std::size_t n);

// Exact ideal membership through a Gröbner basis normal form.
bool ideal_contains(const BinomialIdeal& ideal, const Binomial& b);
bool same_ideal(const BinomialIdeal& a, const BinomialIdeal& b);
// Every generator becomes a Laurent identity after substituting the map.
bool vanishes_on(const BinomialIdeal& ideal, const MonomialMap& map);

// Reduced Gröbner basis in degree reverse lexicographic order, leading term as lhs.
std::vector<Binomial> groebner_basis(const BinomialIdeal& ideal);

// Points of F_q^t (q prime) on which every generator vanishes, in lexicographic order.
std::vector<std::vector<std::int64_t>> toric_points(const BinomialIdeal& ideal, std::int64_t q);

}  // namespace toric
