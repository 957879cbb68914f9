#pragma once

#include "dioext/sset.hpp"

#include <vector>

namespace dioext {

// A simplicial map, stored as the image reference of every nondegenerate
// simplex of the domain.  Degenerate simplices map by word composition.
struct SimplicialMap {
  SSetPtr dom;
  SSetPtr cod;
  std::vector<SimplexRef> image; // indexed by domain nondegenerate id

  SimplexRef apply(SimplexRef r) const {
    const SimplexRef& t = image.at(r.target);
    return SimplexRef{t.target, word_compose(r.word, t.word)};
  }
};

SimplicialMap identity_map(SSetPtr X);

// Constant map to the basepoint of Y (requires Y pointed).
SimplicialMap constant_map(SSetPtr X, SSetPtr Y);

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f); // g after f

// Checks dimension preservation, face commutation, and (when both carry
// basepoints) pointedness.  Throws FormError / PointednessError on failure.
void check_map(const SimplicialMap& f, bool require_pointed = false);

bool is_pointed(const SimplicialMap& f);

// The unique degenerate reference of dimension n over a vertex.
inline SimplexRef degenerate_vertex(std::uint32_t vertex, int n) {
  return SimplexRef{vertex, low_bits(n)};
}

} // namespace dioext
