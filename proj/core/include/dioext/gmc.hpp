#pragma once

#include "dioext/attach.hpp"
#include "dioext/bigint.hpp"
#include "dioext/cup.hpp"
#include "dioext/cylinder.hpp"
#include "dioext/homology.hpp"

#include <string>
#include <vector>

namespace dioext {

// A generalized mapping cylinder: a total space with two rim inclusions.
// The lower rim inclusion is a homotopy equivalence, so the pair of rims
// represents the homotopy class lower^{-1} o upper.  Both rims embed as
// basepoint-sharing simplicial subsets (image words are 0).
struct Gmc {
  SSetPtr total;
  SimplicialMap upper; // X -> total
  SimplicialMap lower; // Y -> total
  std::string class_tag; // advisory description, never used for verification
};

// Reduced mapping cylinder of a pointed map, upper rim X, lower rim Y.
Gmc gmc_from_map(const SimplicialMap& f, const std::string& tag = "map");

// Swap the rims.  Requires the upper rim to also induce homology
// isomorphisms (checked); throws PreconditionError otherwise.
Gmc opposite(const Gmc& M);

// Glue M's lower rim onto N's upper rim: a cylinder for the composite class.
// The two rims must be the same simplicial set, by encoding equality.
Gmc compose(const Gmc& N, const Gmc& M);

// Wedge of the totals with the fold cylinder of the shared lower rim
// appended: a cylinder X_1 v ... v X_m => Y.
Gmc wedge_gmc(const std::vector<Gmc>& Ms);

// For upper rims all equal to the sphere model: a cylinder for the sum of
// the classes, via the pinch chain sphere <= chain/boundary => wedge => Y.
Gmc sum_gmc(const std::vector<Gmc>& Ms);

// Degree c = +-2^d cylinder on the p-sphere model, built by composing
// degree-2 cylinders (and one degree--1 cylinder for the sign).  The degree
// is re-verified through the homology oracle.
Gmc power2_degree_gmc(int p, const BigInt& c);

// Cylinder for c_1[f_1] + ... + c_m[f_m]: binary expansions of the c_i
// composed below the generators, then summed.  Generators must have the
// p-sphere model as upper rim and a common lower rim.
Gmc int_combination_gmc(const std::vector<Gmc>& generators, const std::vector<BigInt>& c);

// Quotient of the total by the upper rim, for upper rims that are wedges of
// sphere models: the result carries the lower space with cells attached
// along the represented classes.
struct CellAttachment {
  SSetPtr space;
  SimplicialMap include_lower;  // Y -> space
  SimplicialMap collapse_upper; // total -> space
};
CellAttachment attach_cells_via_gmc(const Gmc& M);

// Attachment together with geometric cup bases: H_2 cycles through the
// lower-rim wedge cells, H_4 cycles through boundary preimages of the upper
// summands.  Needs a wedge of 2-sphere models below, 3-sphere models above,
// and a total space without homology in degrees 3 and 4 (cylinder-built
// totals retract onto the lower rim, so this holds for them).
struct AttachedCupBases {
  CellAttachment at;
  IntMatrix gens2; // c_2 x r cycle columns, chain order of at.space
  IntMatrix gens4; // c_4 x s
};
AttachedCupBases attach_with_cup_bases(const Gmc& M);

// The represented map on H_p in the rim bases: lower^{-1} o upper.
IntMatrix gmc_induced_matrix(const Gmc& M, int p);

// Degree of a sphere-to-sphere cylinder, via the homology oracle.
BigInt gmc_degree(const Gmc& M, int p);

// Hopf invariant of a cylinder sphere_3-like => sphere_2-like: the cup
// square coefficient in the quotient by the upper rim.
BigInt gmc_hopf_invariant(const Gmc& M);

// Cup form of the quotient by the upper rim, read in the geometric bases of
// attach_with_cup_bases (r two-dimensional generators, s four-dimensional
// ones), so entries line up with the wedge coordinates.
CupMatrix gmc_cup_form(const Gmc& M);

// Fold w.space -> summand; all summands must be the same space.
SimplicialMap fold_map(const WedgeResult& w);

// Collapse everything except one maximal cell of X onto the p-sphere model.
SimplicialMap top_cell_collapse(SSetPtr X, std::uint32_t top, int p);

// The face-closed witness of a rim's image inside the total.
SubsetWitness rim_witness(const SimplicialMap& rim);

} // namespace dioext
