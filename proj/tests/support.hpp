#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "toric/fan.hpp"

namespace testing_support {

using namespace toric;

inline IntVector v(std::initializer_list<long long> xs) { return make_vector(xs); }

inline std::vector<IntVector> vs(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

inline oracle::Vec ll(const IntVector& x) {
  oracle::Vec out;
  for (const auto& e : x) out.push_back(e.convert_to<long long>());
  return out;
}

inline IntVector big(const oracle::Vec& x) {
  IntVector out;
  for (auto e : x) out.emplace_back(e);
  return out;
}

inline Cone cone(std::initializer_list<std::initializer_list<long long>> rows) {
  auto g = vs(rows);
  return Cone(g[0].size(), g);
}

using Raw = std::vector<std::vector<IntVector>>;

inline Raw raw(std::initializer_list<std::initializer_list<std::initializer_list<long long>>> cones) {
  Raw out;
  for (auto c : cones) out.push_back(vs(c));
  return out;
}

inline Raw p1xp1_raw() { return raw({{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}, {{-1, 0}, {0, -1}}, {{0, -1}, {1, 0}}}); }
inline Raw p2_raw() { return raw({{{1, 0}, {0, 1}}, {{0, 1}, {-1, -1}}, {{-1, -1}, {1, 0}}}); }
// The weighted projective plane fan of the coding example, rays (2,-1), (-1,2), (-1,-1).
inline Raw triangle_raw() { return raw({{{2, -1}, {-1, 2}}, {{-1, 2}, {-1, -1}}, {{-1, -1}, {2, -1}}}); }
// Rays at every multiple of 45 degrees.
inline Raw octagon_raw() {
  return raw({{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}, {{0, 1}, {-1, 1}}, {{-1, 1}, {-1, 0}},
              {{-1, 0}, {-1, -1}}, {{-1, -1}, {0, -1}}, {{0, -1}, {1, -1}}, {{1, -1}, {1, 0}}});
}
inline Fan p1xp1() { return validate_fan(2, p1xp1_raw()); }
inline Fan p2() { return validate_fan(2, p2_raw()); }
inline Fan triangle_fan() { return validate_fan(2, triangle_raw()); }
inline Fan octagon() { return validate_fan(2, octagon_raw()); }

// Collapses every whitespace run (newlines included) to one space and trims the ends.
inline std::string normalize_ws(const std::string& s) {
  std::istringstream in(s);
  std::string word, out;
  while (in >> word) out += (out.empty() ? "" : " ") + word;
  return out;
}

}  // namespace testing_support
