#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/binomial.hpp"

namespace toric {

// GAP list syntax: "[ 1, 0 ]", "[ [ 1, 0 ], [ 1, 1 ] ]".
std::string gap(const IntVector& v);
std::string gap(const std::vector<IntVector>& vs);
std::string gap(const std::vector<std::vector<IntVector>>& vss);

// Names prefix1..prefixn.
std::vector<std::string> numbered(const std::string& prefix, std::size_t n);

// Product of names[i]^e[i] over the nonzero entries; "1" when all vanish. Entries must be >= 0.
std::string magma_monomial(const IntVector& e, const std::vector<std::string>& names);
// Laurent monomial as num/den; the denominator is parenthesized when it has several factors.
std::string magma_fraction(const IntVector& e, const std::vector<std::string>& names);
std::string magma_binomial(const Binomial& b, const std::vector<std::string>& names);

// "[\n    a,\n    b\n]"
std::string magma_sequence(const std::vector<std::string>& items);

std::string magma_ideal(const BinomialIdeal& ideal);
// Source is the torus {x_i x_{n+i} = 1}; x_i^{-1} is written x_{n+i}.
std::string magma_embedding(const MonomialMap& map);
// Map from affine space with coordinates $.1..$.n, negative powers as fractions.
std::string magma_chart(const MonomialMap& map);
// Rows right-aligned to a common width, "( 1 -2)".
std::string magma_lattice(const std::vector<IntVector>& basis, const std::optional<Integer>& denominator);
std::string magma_code_header(std::size_t n, std::size_t k, std::size_t d, std::int64_t q);

}  // namespace toric
