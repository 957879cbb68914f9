#pragma once

#include "dioext/attach.hpp"
#include "dioext/product.hpp"
#include "dioext/smap.hpp"

namespace dioext {

// Mapping cylinder of f: X -> Y, built as attach(X x Delta^1, X x {0}, f, Y).
// Vertex 0 of Delta^1 is the Y end.  The reduced variant additionally
// collapses the basepoint segment and requires f pointed.
struct CylinderResult {
  SSetPtr space;
  SimplicialMap i_upper;    // X -> space (the X x {1} end)
  SimplicialMap i_lower;    // Y -> space
  SimplicialMap retraction; // space -> Y, retraction onto the Y end
};
CylinderResult cylinder(const SimplicialMap& f, bool reduced);

// Cyl(f) with the upper rim collapsed; basepoint is the collapsed point
// when reduced (or the image of Y's basepoint otherwise, if present).
struct ConeResult {
  SSetPtr space;
  SimplicialMap i_lower; // Y -> space
};
ConeResult cone(const SimplicialMap& f, bool reduced);

} // namespace dioext
