#pragma once

#include "dioext/smap.hpp"
#include "dioext/sset.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace dioext {

// Normal subdivision.  A nondegenerate p-simplex of sd(X) is a pair: a
// nondegenerate simplex x of X together with a strictly increasing chain of
// vertex-subset masks F_0 < ... < F_p of x with F_p the full set; the full
// mask is implicit and not stored.  Ids are assigned dimension by dimension
// (base simplex ascending, then mask chain in lexicographic order), so face
// targets always precede their cofaces.
struct SdResult {
  SSetPtr space;
  SSetPtr base_space;
  std::vector<std::uint32_t> base;               // cell -> simplex of X
  std::vector<std::vector<std::uint32_t>> masks; // cell -> F_0..F_{p-1}
  SimplicialMap lastv;                           // sd X -> X

  std::uint32_t find(std::uint32_t x, const std::vector<std::uint32_t>& chain) const;

  std::unordered_map<std::string, std::uint32_t> index; // packed key -> cell
};

SdResult sd(SSetPtr X);

SimplicialMap sd_map(const SimplicialMap& f, const SdResult& sx, const SdResult& sy);

// Push a mask chain through the monotone surjection u onto a target of
// dimension tdim.  Consecutive equal images become degeneracy bits; the
// trailing full mask is dropped from the returned chain.
struct PushedChain {
  std::vector<std::uint32_t> chain;
  DegWord word = 0;
};
PushedChain push_chain(const std::vector<int>& u, int tdim,
                       const std::vector<std::uint32_t>& masks);

} // namespace dioext
