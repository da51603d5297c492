#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/cone.hpp"

namespace toric {

// A validated fan, closed under faces. Listed cones keep the generator lists they
// were given with (possibly non-primitive), which is how GAP prints them.
class Fan {
 public:
  Fan() = default;

  std::size_t ambient_dim() const { return n_; }
  // Every cone of the fan, sorted by dimension and then generators.
  const std::vector<Cone>& cones() const { return cones_; }
  // Cones that are not proper faces of another cone, in input order.
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  // Primitive ray generators in order of first appearance in the input.
  const std::vector<IntVector>& rays() const { return rays_; }

  bool contains(const Cone& c) const;
  // Generator list used for printing: the raw input list for listed cones, and for
  // derived faces the sorted raw generators of the first listed cone containing them.
  const std::vector<IntVector>& display(const Cone& c) const;
  bool is_listed(const Cone& c) const;
  // Cones given at validation, deduplicated, in input order.
  const std::vector<Cone>& listed_cones() const { return listed_order_; }

  friend bool operator==(const Fan& a, const Fan& b) { return a.n_ == b.n_ && a.cones_ == b.cones_; }

 private:
  friend Fan validate_fan(std::size_t, const std::vector<std::vector<IntVector>>&);
  std::size_t index(const Cone& c) const;

  std::size_t n_ = 0;
  std::vector<Cone> cones_;
  std::vector<std::vector<IntVector>> display_;
  std::vector<bool> listed_;
  std::vector<Cone> listed_order_;
  std::vector<Cone> maximal_;
  std::vector<IntVector> rays_;
};

Fan validate_fan(std::size_t ambient_dim, const std::vector<std::vector<IntVector>>& cones);
Fan validate_fan(std::size_t ambient_dim, const std::vector<Cone>& cones);

bool is_complete(const Fan& f);
bool is_smooth(const Fan& f);
std::size_t number_of_cones_dim(const Fan& f, std::size_t k);

// raw: unprojected generator lists of the cones containing sigma, as GAP prints them.
// projected: images under a projection Z^n -> Z^(n - dim sigma) with kernel Z·sigma.
struct Star {
  std::vector<std::vector<IntVector>> raw;
  std::vector<Cone> cones;
  IntMatrix projection;  // n × (n - dim sigma); x ↦ x · projection
  Fan projected;
};
Star star(const Cone& sigma, const Fan& f);

// Odd k give 0. warning is set when the fan is not smooth and complete.
Integer betti_number(const Fan& f, std::size_t k, std::string* warning = nullptr);
Integer euler_characteristic(const Fan& f);
Integer cardinality_of_X(const Fan& f, std::int64_t q);
bool is_prime_power(std::int64_t q);

// m maps source coordinates to target coordinates: v ↦ m·v.
struct FanMorphism {
  IntMatrix matrix;
  Fan source;
  Fan target;
  std::vector<std::pair<Cone, Cone>> cone_assignment;
};
struct FanMorphismResult {
  std::optional<FanMorphism> morphism;
  std::optional<Cone> failing_cone;
  explicit operator bool() const { return morphism.has_value(); }
};
FanMorphismResult is_fan_morphism(const IntMatrix& m, const Fan& source, const Fan& target);

struct FanAutomorphismGroup {
  std::vector<IntMatrix> elements;  // sorted, identity included
};
FanAutomorphismGroup fan_automorphism_group(const Fan& f);
Fan apply(const IntMatrix& g, const Fan& f);

// Transition data on U_tau. The chart coordinates of U_tau are the lifted Hilbert
// basis of tau modulo its lineality, followed by a basis of the lineality lattice
// (those coordinates are invertible). Each map sends the chart coordinates to the
// Hilbert basis generators of S_sigma_i.
std::pair<MonomialMap, MonomialMap> gluing_map(const Cone& tau, const Cone& sigma1, const Cone& sigma2,
                                               const Lattice& l);

}  // namespace toric
