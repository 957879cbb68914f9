#include "dioext/cylinder.hpp"

#include "dioext/models.hpp"

#include <set>

namespace dioext {

CylinderResult cylinder(const SimplicialMap& f, bool reduced) {
  SSetPtr X = f.dom;
  SSetPtr Y = f.cod;
  if (reduced && !is_pointed(f)) throw PointednessError("cylinder: reduced requires a pointed map");

  SSetPtr seg = delta(1); // v0 = 0 (Y end), v1 = 1, edge = 2
  ProductResult P = product(X, seg);

  SubsetWitness A;
  std::vector<SimplexRef> images;
  for (std::uint32_t id = 0; id < P.entries.size(); ++id) {
    if (P.entries[id].b == 0) {
      A.members.push_back(id);
      images.push_back(f.image[P.entries[id].a]);
    }
  }
  AttachResult C = attach(P.space, A, images, Y);

  CylinderResult out;
  out.space = C.space;

  out.i_upper.dom = X;
  out.i_upper.cod = C.space;
  out.i_upper.image.reserve(X->size());
  for (std::uint32_t x = 0; x < X->size(); ++x) {
    std::uint32_t n = P.find(x, 1, 0, low_bits(X->dim(x)));
    out.i_upper.image.push_back(C.from_base[n]);
  }

  out.i_lower = C.inclusion(Y);

  out.retraction.dom = C.space;
  out.retraction.cod = Y;
  out.retraction.image.resize(C.space->size());
  for (std::uint32_t y = 0; y < Y->size(); ++y)
    out.retraction.image[C.from_glued[y]] = SimplexRef{y, 0};
  for (std::uint32_t id = 0; id < P.entries.size(); ++id) {
    SimplexRef r = C.from_base[id];
    if (r.word != 0) continue; // a glued simplex, already covered
    const ProductEntry& e = P.entries[id];
    if (e.b == 0) continue;
    const SimplexRef& fa = f.image[e.a];
    out.retraction.image[r.target] = SimplexRef{fa.target, word_compose(e.u, fa.word)};
  }

  if (!reduced) return out;

  std::uint32_t bx = *X->basepoint();
  std::uint32_t seg_v1 = C.from_base[P.find(bx, 1, 0, 0)].target;
  std::uint32_t seg_edge = C.from_base[P.find(bx, 2, 1, 0)].target;
  AttachResult Q = quotient(C.space, face_closure(*C.space, {seg_v1, seg_edge}));

  CylinderResult red;
  red.space = Q.space;
  red.i_upper = compose(Q.quotient_map(C.space), out.i_upper);
  red.i_lower = compose(Q.quotient_map(C.space), out.i_lower);
  red.retraction.dom = Q.space;
  red.retraction.cod = Y;
  red.retraction.image.resize(Q.space->size());
  red.retraction.image[0] = SimplexRef{*Y->basepoint(), 0};
  for (std::uint32_t c = 0; c < C.space->size(); ++c) {
    SimplexRef r = Q.from_base[c];
    if (r.word == 0 && r.target != 0) red.retraction.image[r.target] = out.retraction.image[c];
  }
  return red;
}

ConeResult cone(const SimplicialMap& f, bool reduced) {
  CylinderResult cyl = cylinder(f, reduced);
  std::set<std::uint32_t> members;
  for (const SimplexRef& r : cyl.i_upper.image) members.insert(r.target);
  SubsetWitness W;
  W.members.assign(members.begin(), members.end());
  AttachResult Q = quotient(cyl.space, W);

  ConeResult out;
  out.space = Q.space;
  out.i_lower = compose(Q.quotient_map(cyl.space), cyl.i_lower);
  return out;
}

} // namespace dioext
