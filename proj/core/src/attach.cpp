#include "dioext/attach.hpp"

#include "dioext/models.hpp"

#include <limits>

namespace dioext {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
}

SimplicialMap AttachResult::quotient_map(SSetPtr X) const {
  SimplicialMap f;
  f.dom = std::move(X);
  f.cod = space;
  f.image = from_base;
  return f;
}

SimplicialMap AttachResult::inclusion(SSetPtr Y) const {
  SimplicialMap f;
  f.dom = std::move(Y);
  f.cod = space;
  f.image.reserve(from_glued.size());
  for (std::uint32_t id : from_glued) f.image.push_back(SimplexRef{id, 0});
  return f;
}

AttachResult attach(SSetPtr X, const SubsetWitness& A, const std::vector<SimplexRef>& images,
                    SSetPtr Y) {
  if (!witness_face_closed(*X, A)) throw FormError("attach: witness not face-closed");
  if (images.size() != A.members.size()) throw FormError("attach: image count mismatch");

  std::vector<std::uint32_t> pos(X->size(), kNone);
  for (std::size_t k = 0; k < A.members.size(); ++k) pos[A.members[k]] = static_cast<std::uint32_t>(k);

  // f must be a valid simplicial map on the subcomplex A.
  for (std::size_t k = 0; k < A.members.size(); ++k) {
    std::uint32_t m = A.members[k];
    if (images[k].target >= Y->size() || Y->ref_dim(images[k]) != X->dim(m))
      throw FormError("attach: image dimension mismatch");
    int d = X->dim(m);
    for (int i = 0; i <= d && d > 0; ++i) {
      SimplexRef fr = X->face(m, i);
      const SimplexRef& ft = images[pos[fr.target]];
      SimplexRef a{ft.target, word_compose(fr.word, ft.word)};
      SimplexRef b = Y->apply_face(images[k], i);
      if (!(a == b)) throw FormError("attach: map does not commute with faces on the subset");
    }
  }

  SimplicialSet R;
  for (std::uint32_t y = 0; y < Y->size(); ++y) {
    int d = Y->dim(y);
    std::vector<SimplexRef> fs;
    for (int i = 0; i <= d && d > 0; ++i) fs.push_back(Y->face(y, i));
    R.add_simplex(d, fs);
  }

  std::vector<std::uint32_t> new_id(X->size(), kNone);
  std::uint32_t next = Y->size();
  for (std::uint32_t x = 0; x < X->size(); ++x)
    if (pos[x] == kNone) new_id[x] = next++;

  auto push = [&](SimplexRef r) -> SimplexRef {
    if (pos[r.target] != kNone) {
      const SimplexRef& img = images[pos[r.target]];
      return SimplexRef{img.target, word_compose(r.word, img.word)};
    }
    return SimplexRef{new_id[r.target], r.word};
  };

  for (std::uint32_t x = 0; x < X->size(); ++x) {
    if (pos[x] != kNone) continue;
    int d = X->dim(x);
    std::vector<SimplexRef> fs;
    for (int i = 0; i <= d && d > 0; ++i) fs.push_back(push(X->face(x, i)));
    R.add_simplex(d, fs);
  }

  if (Y->basepoint()) R.set_basepoint(*Y->basepoint());

  AttachResult out;
  out.space = freeze(std::move(R));
  out.from_base.reserve(X->size());
  for (std::uint32_t x = 0; x < X->size(); ++x)
    out.from_base.push_back(pos[x] != kNone ? images[pos[x]] : SimplexRef{new_id[x], 0});
  out.from_glued.resize(Y->size());
  for (std::uint32_t y = 0; y < Y->size(); ++y) out.from_glued[y] = y;
  return out;
}

AttachResult quotient(SSetPtr X, const SubsetWitness& A) {
  SSetPtr pt = point();
  std::vector<SimplexRef> images;
  images.reserve(A.members.size());
  for (std::uint32_t m : A.members) images.push_back(degenerate_vertex(0, X->dim(m)));
  return attach(std::move(X), A, images, pt);
}

WedgeResult wedge(const std::vector<SSetPtr>& Xs) {
  if (Xs.empty()) throw DomainError("wedge: empty input");
  for (const SSetPtr& x : Xs)
    if (!x->basepoint()) throw PointednessError("wedge: unpointed summand");

  SimplicialSet W;
  W.add_simplex(0, {});
  W.set_basepoint(0);

  WedgeResult out;
  std::uint32_t next = 1;
  for (const SSetPtr& x : Xs) {
    std::uint32_t bp = *x->basepoint();
    std::vector<std::uint32_t> new_id(x->size(), kNone);
    for (std::uint32_t id = 0; id < x->size(); ++id)
      new_id[id] = (id == bp) ? 0 : next++;
    for (std::uint32_t id = 0; id < x->size(); ++id) {
      if (id == bp) continue;
      int d = x->dim(id);
      std::vector<SimplexRef> fs;
      for (int i = 0; i <= d && d > 0; ++i) {
        SimplexRef f = x->face(id, i);
        fs.push_back(SimplexRef{new_id[f.target], f.word});
      }
      W.add_simplex(d, fs);
    }
    SimplicialMap inc;
    inc.dom = x;
    inc.image.reserve(x->size());
    for (std::uint32_t id = 0; id < x->size(); ++id) inc.image.push_back(SimplexRef{new_id[id], 0});
    out.inclusions.push_back(std::move(inc));
  }

  out.space = freeze(std::move(W));
  for (SimplicialMap& inc : out.inclusions) inc.cod = out.space;
  return out;
}

SubsetExtract subset_extract(SSetPtr X, const SubsetWitness& A) {
  if (!witness_face_closed(*X, A)) throw FormError("subset_extract: witness not face-closed");
  std::vector<std::uint32_t> new_id(X->size(), kNone);
  for (std::size_t k = 0; k < A.members.size(); ++k)
    new_id[A.members[k]] = static_cast<std::uint32_t>(k);

  SimplicialSet S;
  for (std::uint32_t m : A.members) {
    int d = X->dim(m);
    std::vector<SimplexRef> fs;
    for (int i = 0; i <= d && d > 0; ++i) {
      SimplexRef f = X->face(m, i);
      fs.push_back(SimplexRef{new_id[f.target], f.word});
    }
    S.add_simplex(d, fs);
  }
  if (X->basepoint() && new_id[*X->basepoint()] != kNone) S.set_basepoint(new_id[*X->basepoint()]);

  SubsetExtract out;
  out.space = freeze(std::move(S));
  out.to_ambient = A.members;
  out.inclusion.dom = out.space;
  out.inclusion.cod = std::move(X);
  out.inclusion.image.reserve(A.members.size());
  for (std::uint32_t m : A.members) out.inclusion.image.push_back(SimplexRef{m, 0});
  return out;
}

} // namespace dioext
