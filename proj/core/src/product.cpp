#include "dioext/product.hpp"

namespace dioext {

std::uint32_t ProductResult::find(std::uint32_t a, std::uint32_t b, DegWord u, DegWord v) const {
  auto it = lookup.find({a, b, u, v});
  if (it == lookup.end()) throw IntegrityError("product: pair not found");
  return it->second;
}

ProductResult product(SSetPtr X, SSetPtr Y) {
  ProductResult R;
  R.left = X;
  R.right = Y;

  int dx = X->dimension();
  int dy = Y->dimension();
  if (dx < 0 || dy < 0) throw IntegrityError("product: empty factor");
  if (dx + dy > kMaxDim) throw ResourceError("product: dimension exceeds limit");

  SimplicialSet P;

  // Dimension-major enumeration so faces precede cofaces.
  for (int n = 0; n <= dx + dy; ++n) {
    std::uint32_t full = low_bits(n);
    for (std::uint32_t a = 0; a < X->size(); ++a) {
      int p = X->dim(a);
      if (p > n) continue;
      int cu = n - p;
      for (std::uint32_t b = 0; b < Y->size(); ++b) {
        int q = Y->dim(b);
        if (q > n || (n - p) + (n - q) > n) continue;
        int cv = n - q;
        // u over subsets of {0..n-1} of size cu, numeric ascending; v over
        // subsets of the complement of size cv, numeric ascending.
        for (std::uint32_t u = 0;; u = ((u - full) & full)) {
          if (__builtin_popcount(u) == cu) {
            std::uint32_t pool = full & ~u;
            for (std::uint32_t v = 0;; v = ((v - pool) & pool)) {
              if (__builtin_popcount(v) == cv) {
                std::vector<SimplexRef> fs;
                fs.reserve(static_cast<std::size_t>(n) + 1);
                for (int i = 0; i < n + 1 && n > 0; ++i) {
                  SimplexRef ra = X->apply_face(SimplexRef{a, u}, i);
                  SimplexRef rb = Y->apply_face(SimplexRef{b, v}, i);
                  DegWord joint = ra.word & rb.word;
                  DegWord ua = ra.word, vb = rb.word;
                  for (int j = n - 1; j >= 0; --j) {
                    if (joint & (1u << j)) {
                      ua = word_delete_bit(ua, j);
                      vb = word_delete_bit(vb, j);
                    }
                  }
                  fs.push_back(SimplexRef{R.find(ra.target, rb.target, ua, vb), joint});
                }
                std::uint32_t id = P.add_simplex(n, fs);
                R.entries.push_back(ProductEntry{a, b, u, v});
                R.lookup.emplace(std::array<std::uint32_t, 4>{a, b, u, v}, id);
              }
              if (v == pool) break;
            }
          }
          if (u == full) break;
        }
      }
    }
  }

  if (X->basepoint() && Y->basepoint()) {
    auto it = R.lookup.find({*X->basepoint(), *Y->basepoint(), 0, 0});
    if (it != R.lookup.end()) P.set_basepoint(it->second);
  }

  R.space = freeze(std::move(P));

  R.proj_left.dom = R.space;
  R.proj_left.cod = X;
  R.proj_right.dom = R.space;
  R.proj_right.cod = Y;
  for (const ProductEntry& e : R.entries) {
    R.proj_left.image.push_back(SimplexRef{e.a, e.u});
    R.proj_right.image.push_back(SimplexRef{e.b, e.v});
  }
  return R;
}

} // namespace dioext
