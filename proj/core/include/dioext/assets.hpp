#pragma once

#include "dioext/gmc.hpp"

namespace dioext {

// Self-map models of the p-sphere (p >= 1), verified against the homology
// oracle at construction time and cached.
Gmc degree_two_gmc(int p);
Gmc degree_minus_one_gmc(int p);

// The boundary of Delta^d x Delta^d together with its two collapse maps:
// onto the wedge of two d-spheres (kill everything but the open top cells
// of the factors) and onto the (2d-1)-sphere model (kill everything but one
// top cell).
struct WhiteheadAsset {
  SSetPtr domain;          // boundary of Delta^d x Delta^d, a (2d-1)-sphere
  SSetPtr wedge;           // sphere(d) v sphere(d); cells 1 and 2
  SimplicialMap attaching; // domain -> wedge
  SimplicialMap collapse;  // domain -> sphere(2d-1)
};
const WhiteheadAsset& whitehead_asset(int d);

Gmc whitehead_gmc(int d);        // S^{2d-1} => S^d v S^d
Gmc whitehead_square_gmc(int d); // S^{2d-1} => S^d

// Hopf map, loaded from the asset directory (DIOEXT_ASSET_DIR overrides the
// compiled-in location) and verified at load time: the domain must validate,
// the map must be pointed, and the mapping-cone cup square must be +-1.
struct HopfAsset {
  SSetPtr domain; // triangulated 3-sphere
  SSetPtr target; // sphere(2)
  SimplicialMap map;
};
const HopfAsset& hopf_asset();

Gmc hopf_gmc(); // S^3 => S^2

} // namespace dioext
