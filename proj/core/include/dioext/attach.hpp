#pragma once

#include "dioext/smap.hpp"
#include "dioext/sset.hpp"

#include <vector>

namespace dioext {

// Result of gluing X onto Y along a face-closed subset A of X via f: A -> Y.
// Ids: all of Y first (unchanged), then X \ A in ascending id order.
struct AttachResult {
  SSetPtr space;
  std::vector<SimplexRef> from_base;    // X nondegenerate id -> ref in space
  std::vector<std::uint32_t> from_glued; // Y nondegenerate id -> id in space

  SimplicialMap quotient_map(SSetPtr X) const; // X -> space
  SimplicialMap inclusion(SSetPtr Y) const;    // Y -> space
};

// images[k] is the image in Y of member A.members[k].
AttachResult attach(SSetPtr X, const SubsetWitness& A, const std::vector<SimplexRef>& images,
                    SSetPtr Y);

// Collapse A to a fresh point (id 0, becomes the basepoint).
AttachResult quotient(SSetPtr X, const SubsetWitness& A);

struct WedgeResult {
  SSetPtr space;
  std::vector<SimplicialMap> inclusions;
};
WedgeResult wedge(const std::vector<SSetPtr>& Xs);

// Standalone copy of a subcomplex, ids renumbered ascending.
struct SubsetExtract {
  SSetPtr space;
  std::vector<std::uint32_t> to_ambient; // new id -> ambient id
  SimplicialMap inclusion;               // space -> ambient
};
SubsetExtract subset_extract(SSetPtr X, const SubsetWitness& A);

} // namespace dioext
