#pragma once

#include "dioext/smap.hpp"
#include "dioext/sset.hpp"

#include <vector>

namespace dioext {

// Single vertex, basepoint 0.
SSetPtr point();

// Standard p-simplex: nondegenerate simplices are the nonempty subsets of
// {0..p}, ordered by (dimension, then subset value); basepoint = vertex 0.
SSetPtr delta(int p);

// Witness of the boundary subcomplex of delta(p): everything but the top.
SubsetWitness boundary_delta_witness(int p);

// Sphere model: one vertex (id 0, basepoint) and one p-cell (id 1) all of
// whose faces are basepoint degeneracies.
SSetPtr sphere(int p);

// Simplicial complex spanned by the given top cells (vertex tuples, strictly
// increasing).  Simplices are all nonempty subtuples, ordered by
// (dimension, lexicographic vertex tuple); basepoint = vertex 0.
SSetPtr complex_from_top_cells(int vertex_count, const std::vector<std::vector<int>>& tops);

std::uint32_t complex_find(const SimplicialSet& X, const std::vector<std::uint32_t>& vertices);

// Chain of m copies of Delta^p sharing interior walls, with its boundary
// subcomplex: copy i spans (v_{i-1}, v_i, a_1..a_{p-1}), apexes last.
struct ChainModel {
  SSetPtr chain;
  SubsetWitness boundary;
  std::vector<std::uint32_t> copy_ids; // the m top cells, in chain order
};
ChainModel chain_model(int p, int m);

// The quotient chain/boundary together with the two collapse maps:
// q hits the sphere cell with the first copy, delta hits wedge summand i
// with copy i.
struct ChainQuotient {
  SSetPtr space;
  std::vector<std::uint32_t> copy_cells; // ids of the m surviving top cells
  SimplicialMap q;                       // space -> sphere(p)
  SimplicialMap delta;                   // space -> wedge of m spheres
  SSetPtr sphere_target;
  SSetPtr wedge_target;
};
ChainQuotient chain_quotient(int p, int m);

} // namespace dioext
