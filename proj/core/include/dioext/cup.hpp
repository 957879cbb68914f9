#pragma once

#include "dioext/homology.hpp"

namespace dioext {

// Cup products H^2 x H^2 -> H^4 for spaces with H_1 = H_3 = 0 and free
// H_2, H_4.  entry(i, j) holds the coordinates of x_i cup x_j against the
// basis dual to the stored H_4 cycle basis.
struct CupMatrix {
  std::size_t r = 0; // rank of H^2
  std::size_t s = 0; // rank of H^4
  std::vector<std::vector<BigInt>> entries; // r*r vectors of length s

  const std::vector<BigInt>& entry(std::size_t i, std::size_t j) const {
    return entries[i * r + j];
  }
};

CupMatrix cup_matrix(const SimplicialSet& X);

// Same pairing against caller-chosen bases.  gens2 and gens4 hold cycle
// columns in the chain orders of chain_index (rows follow the 2-cells resp.
// 4-cells of X, ascending ids); column counts must match the betti numbers
// and the H_2 columns must be a homology basis or the dual solve fails.
CupMatrix cup_matrix(const SimplicialSet& X, const IntMatrix& gens2,
                     const IntMatrix& gens4);

// Cup-square coefficient of the degree-2 generator in the reduced mapping
// cone; f must run from a 3-sphere model to a 2-sphere model.
BigInt hopf_invariant(const SimplicialMap& f);

} // namespace dioext
