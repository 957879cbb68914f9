#pragma once

#include "dioext/smap.hpp"
#include "dioext/subdivision.hpp"

#include <cstdint>
#include <vector>

namespace dioext {

// Twofold subdivision: the order complex of the subchain partial order on
// the nondegenerate simplices of sd(X).  Vertices are those simplices,
// numbered by (chain length descending, sd id ascending) so that vertex ids
// increase along descending subchain sequences; an n-simplex is an (n+1)-term
// descending sequence, stored as its ascending vertex tuple.  The output is
// always a simplicial complex.  gamma maps it back to X by the last-vertex
// recipe through the canonical comparison operators.
struct BsdResult {
  SdResult sd;
  SSetPtr space;
  std::vector<std::uint32_t> vertex_cell; // bsd vertex -> sd cell
  std::vector<std::uint32_t> cell_vertex; // sd cell -> bsd vertex
  std::vector<std::vector<std::uint32_t>> tuple; // bsd id -> vertex tuple
  std::vector<std::uint32_t> bucket_start;       // per dim, first id
  SimplicialMap gamma; // bsd X -> X

  std::uint32_t find_tuple(const std::vector<std::uint32_t>& t) const;
};

BsdResult bsd(SSetPtr X);

SimplicialMap bsd_map(const SimplicialMap& f, const BsdResult& bx, const BsdResult& by);

} // namespace dioext
