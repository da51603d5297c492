#pragma once

#include <vector>

#include "toric/binomial.hpp"

namespace toric {

// Hirzebruch-Jung subdivision of a 2D cone. rays runs from the first generator of
// the original cone to the second; subcones are consecutive pairs.
struct Refinement2D {
  Cone original;
  std::vector<IntVector> inserted_rays;
  std::vector<IntVector> rays;
  std::vector<Cone> subcones;
};
Refinement2D refine_to_regular(const Cone& c);

// The map from the chart U_tau = F^2 of a regular subcone into U_sigma. Chart
// coordinates correspond to the Hilbert basis of tau (its dual basis).
struct ResolutionPatch {
  Cone subcone;
  std::vector<IntVector> chart_basis;
  MonomialMap map;
};
struct ResolutionMap {
  Cone original;
  SemigroupGens target;  // Hilbert basis of sigma, the coordinates of U_sigma
  std::vector<ResolutionPatch> patches;
  MonomialMap torus_chart;  // the dense torus chart, in the form MAGMA prints
};
ResolutionMap resolution_map(const Refinement2D& r, const Lattice& l);

struct Desingularization {
  AffineToricVariety variety;
  Refinement2D refinement;
  ResolutionMap map;
};
Desingularization desing_affine_toric_variety(const Cone& c, const Lattice& l);

// The exponent vectors generate the whole character lattice, so the map is birational.
bool is_birational(const MonomialMap& m);

}  // namespace toric
