#pragma once

// Independent brute-force references for the tests. Plain 64-bit arithmetic, no
// library calls.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

long long dot(const Vec& a, const Vec& b);

// Minimal generators of Z^2 ∩ dual of the cone spanned by v1, v2 (det != 0).
std::set<Vec> hilbert_basis_2d(const Vec& v1, const Vec& v2);

// Whether x^a - x^b lies in the ideal generated by x^l - x^r, decided by walking
// the fiber graph of a. nullopt when more than max_nodes monomials are visited or a
// monomial of total degree above max_degree is reached.
std::optional<bool> binomial_member(const std::vector<std::pair<Vec, Vec>>& gens, const Vec& a, const Vec& b,
                                    long long max_degree, std::size_t max_nodes = 200000);

// Integer points x in [-radius, radius]^n with <x, rays[i]> >= -d[i], in lexicographic order.
std::vector<Vec> divisor_points(const Mat& rays, const Vec& d, long long radius);

// Evaluation code over the prime field F_p: one row per exponent vector, columns
// indexed by (F_p^*)^n in lexicographic order.
Mat evaluation_rows(const Mat& exponents, long long p);
// Every F_p-combination of the rows (with repetitions when the rows are dependent).
std::set<Vec> span(const Mat& rows, long long p);
// Minimum Hamming weight over the nonzero combinations.
long long minimum_distance(const Mat& rows, long long p);
// Rank over F_p.
std::size_t rank_mod_p(Mat rows, long long p);

// 2x2 integer matrices with entries in [-bound, bound] and determinant ±1 that permute
// rays and send every maximal cone (a set of ray indices) onto a maximal cone.
std::vector<Mat> fan_automorphisms_2d(const Mat& rays, const std::vector<std::set<std::size_t>>& cones,
                                      long long bound = 2);

long long determinant(const Mat& m);
// gcd of the maximal minors of a k×n matrix of rank k; 1 exactly when the row
// lattice is saturated.
long long maximal_minor_gcd(const Mat& m);

}  // namespace oracle
