#pragma once

#include "dioext/intmatrix.hpp"
#include "dioext/smap.hpp"
#include "dioext/sset.hpp"

#include <cstdint>
#include <vector>

namespace dioext {

// Nondegenerate simplices bucketed by dimension; column order for all chain
// matrices is ascending id within each bucket.
struct ChainIndex {
  std::vector<std::vector<std::uint32_t>> cells; // [dim] -> ids ascending
  std::vector<std::size_t> pos;                  // id -> index within its bucket
};

ChainIndex chain_index(const SimplicialSet& X);

// Boundary C_p -> C_{p-1} with alternating signs; degenerate faces drop out.
// Rows index (p-1)-cells, columns p-cells.  p = 0 gives a 0 x c_0 matrix;
// p > dim gives c_{p-1} x 0.
IntMatrix boundary_matrix(const SimplicialSet& X, const ChainIndex& ix, int p);
SparseMatrix boundary_sparse(const SimplicialSet& X, const ChainIndex& ix, int p);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion; // invariant factors > 1, divisibility order

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Unreduced integral homology in degrees 0..dimension(X).
std::vector<HomologyGroup> homology(const SimplicialSet& X);
HomologyGroup homology_group(const SimplicialSet& X, int p);

// Explicit generators of H_p.  `factors[i]` is 0 for a free coordinate and
// the invariant factor (> 1) for a torsion coordinate; factor-1 coordinates
// are dropped.  Column i of `cycles` is a representative cycle, and
// `coords * cycles` is the identity, so `coords` reads homology coordinates
// off any cycle vector (torsion rows meaningful mod their factor).
// Cycles are sign-normalized: first nonzero coefficient positive.
struct HomologyBasis {
  int degree = 0;
  std::vector<BigInt> factors;
  IntMatrix cycles; // c_p x n_generators
  IntMatrix coords; // n_generators x c_p
  std::vector<std::uint32_t> cells; // row space: ids of p-cells, ascending
};

HomologyBasis homology_basis(const SimplicialSet& X, int p);

// f_# on C_p in the chain_index column orders (rows codomain, cols domain).
IntMatrix chain_map_matrix(const SimplicialMap& f, int p);
SparseMatrix chain_map_sparse(const SimplicialMap& f, int p);

// Matrix of H_p(f) against the two bases; torsion rows reduced into [0, d).
IntMatrix induced_matrix(const SimplicialMap& f, const HomologyBasis& bx,
                         const HomologyBasis& by);
IntMatrix induced_matrix(const SimplicialMap& f, int p);

// Degree of a map between spaces whose H_p is free of rank 1.
BigInt mapping_degree(const SimplicialMap& f, int p);

// One vertex and no nondegenerate simplices in dimensions 1..k.
bool reduced_check(const SimplicialSet& X, int k);

// f induces isomorphisms on H_p for every p up to the larger dimension.
// (Equal invariant factors plus surjectivity of the induced map; a
// surjection between isomorphic finitely generated groups is an
// isomorphism.)
bool homology_iso_check(const SimplicialMap& f);

// Reduced mapping cone has vanishing reduced homology in dimensions <= n.
bool cone_vanishing_check(const SimplicialMap& f, int n);

} // namespace dioext
