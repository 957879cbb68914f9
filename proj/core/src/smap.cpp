#include "dioext/smap.hpp"

namespace dioext {

SimplicialMap identity_map(SSetPtr X) {
  SimplicialMap f;
  f.dom = X;
  f.cod = X;
  f.image.reserve(X->size());
  for (std::uint32_t id = 0; id < X->size(); ++id) f.image.push_back(SimplexRef{id, 0});
  return f;
}

SimplicialMap constant_map(SSetPtr X, SSetPtr Y) {
  if (!Y->basepoint()) throw PointednessError("constant_map: codomain has no basepoint");
  SimplicialMap f;
  f.dom = X;
  f.cod = Y;
  f.image.reserve(X->size());
  for (std::uint32_t id = 0; id < X->size(); ++id)
    f.image.push_back(degenerate_vertex(*Y->basepoint(), X->dim(id)));
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.cod.get() != g.dom.get() && !(*f.cod == *g.dom))
    throw FormError("compose: codomain of f differs from domain of g");
  SimplicialMap h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.image.reserve(f.image.size());
  for (const SimplexRef& r : f.image) h.image.push_back(g.apply(r));
  return h;
}

void check_map(const SimplicialMap& f, bool require_pointed) {
  const SimplicialSet& X = *f.dom;
  const SimplicialSet& Y = *f.cod;
  if (f.image.size() != X.size()) throw FormError("map: image table size mismatch");
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    const SimplexRef& t = f.image[id];
    if (t.target >= Y.size()) throw FormError("map: dangling image target");
    if (Y.ref_dim(t) != X.dim(id)) throw FormError("map: dimension not preserved");
  }
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    int d = X.dim(id);
    for (int i = 0; i <= d && d > 0; ++i) {
      SimplexRef a = f.apply(X.face(id, i));
      SimplexRef b = Y.apply_face(f.image[id], i);
      if (!(a == b)) throw FormError("map: does not commute with face " + std::to_string(i) +
                                     " at simplex " + std::to_string(id));
    }
  }
  if (require_pointed && !is_pointed(f)) throw PointednessError("map: not pointed");
}

bool is_pointed(const SimplicialMap& f) {
  auto bx = f.dom->basepoint();
  auto by = f.cod->basepoint();
  if (!bx || !by) return false;
  return f.image[*bx] == SimplexRef{*by, 0};
}

} // namespace dioext
