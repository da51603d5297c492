#pragma once

#include <cstdint>
#include <vector>

#include "toric/field.hpp"
#include "toric/polytope.hpp"

namespace toric {

using Word = std::vector<FiniteField::Elem>;

// Points of (F_q^x)^n in lexicographic order of their integer encodings.
std::vector<Word> torus_points(const FiniteField& f, std::size_t n);

struct ToricCode {
  int q = 0;
  std::size_t dim = 0;     // torus dimension n
  std::size_t length = 0;  // (q-1)^n
  std::vector<IntVector> source_points;
  std::vector<Word> generator_rows;  // one evaluation row per source point
  std::vector<Word> basis;           // reduced row echelon form of the rows
  std::size_t k = 0;
};

ToricCode toric_code(const std::vector<IntVector>& points, std::int64_t q);
// Exact, by exhaustive enumeration of the q^k - 1 nonzero messages.
std::size_t minimum_distance(const ToricCode& c);
// All q^k codewords, messages over the reduced basis in lexicographic order.
std::vector<Word> codewords(const ToricCode& c);
// Basis of the null space {x : G x^T = 0}.
std::vector<Word> dual_code_basis(const ToricCode& c);

enum class HansenCase { A, B, C };
HansenCase parse_hansen_case(const std::string& s);
const char* to_string(HansenCase c);

struct HansenBound {
  HansenCase hansen_case;
  std::int64_t a = 0, b = 0, q = 0;
  std::int64_t n = 0, k = 0, d_lower = 0;
};
HansenBound hansen_bound(HansenCase c, std::int64_t a, std::int64_t b, std::int64_t q);
std::vector<IntVector> hansen_polytope_points(HansenCase c, std::int64_t a, std::int64_t b);

struct ConjectureCheck {
  std::int64_t bound = 0;
  std::size_t actual = 0;
  bool equal = false;
};
ConjectureCheck check_distance_conjecture(HansenCase c, std::int64_t a, std::int64_t b, std::int64_t q);

// C_L evaluates the Riemann-Roch basis of D at the torus points; dual is C.
struct GoppaCode {
  ToricCode code;
  std::vector<Word> dual_basis;
};
GoppaCode goppa_toric_code(const TDivisor& d, std::int64_t q);

}  // namespace toric
