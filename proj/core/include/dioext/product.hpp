#pragma once

#include "dioext/smap.hpp"
#include "dioext/sset.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace dioext {

// A nondegenerate simplex of X x Y: the jointly nondegenerate pair
// (s_u a, s_v b) with u and v disjoint words.
struct ProductEntry {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  DegWord u = 0;
  DegWord v = 0;
};

struct ProductKeyHash {
  std::size_t operator()(const std::array<std::uint32_t, 4>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : k) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct ProductResult {
  SSetPtr space;
  SSetPtr left;
  SSetPtr right;
  std::vector<ProductEntry> entries; // indexed by nondegenerate id
  SimplicialMap proj_left;           // space -> X
  SimplicialMap proj_right;          // space -> Y

  std::uint32_t find(std::uint32_t a, std::uint32_t b, DegWord u, DegWord v) const;

  std::unordered_map<std::array<std::uint32_t, 4>, std::uint32_t, ProductKeyHash> lookup;
};

ProductResult product(SSetPtr X, SSetPtr Y);

} // namespace dioext
