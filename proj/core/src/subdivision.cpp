#include "dioext/subdivision.hpp"

#include "dioext/errors.hpp"

#include <bit>

namespace dioext {

namespace {

std::string pack_key(std::uint32_t x, const std::vector<std::uint32_t>& chain) {
  std::string k;
  k.reserve(4 * (chain.size() + 1));
  auto put = [&k](std::uint32_t v) {
    for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  put(x);
  for (std::uint32_t m : chain) put(m);
  return k;
}

std::vector<int> mask_elements(std::uint32_t m) {
  std::vector<int> e;
  for (int b = 0; b < 32; ++b)
    if (m & (1u << b)) e.push_back(b);
  return e;
}

std::uint32_t mask_push(const std::vector<int>& u, std::uint32_t m) {
  std::uint32_t out = 0;
  for (int b = 0; b < 32; ++b)
    if (m & (1u << b)) out |= 1u << u[static_cast<std::size_t>(b)];
  return out;
}

// Re-express the elements of m as their ranks inside the superset g.
std::uint32_t mask_reindex(std::uint32_t m, std::uint32_t g) {
  std::uint32_t out = 0;
  for (int b = 0; b < 32; ++b)
    if (m & (1u << b)) out |= 1u << std::popcount(g & low_bits(b));
  return out;
}

} // namespace

PushedChain push_chain(const std::vector<int>& u, int tdim,
                       const std::vector<std::uint32_t>& masks) {
  const std::uint32_t full = low_bits(tdim + 1);
  PushedChain out;
  for (std::size_t j = 0; j < masks.size(); ++j) {
    std::uint32_t here = mask_push(u, masks[j]);
    std::uint32_t next = j + 1 < masks.size() ? mask_push(u, masks[j + 1]) : full;
    if (here == next)
      out.word |= 1u << j;
    else
      out.chain.push_back(here);
  }
  return out;
}

std::uint32_t SdResult::find(std::uint32_t x, const std::vector<std::uint32_t>& chain) const {
  auto it = index.find(pack_key(x, chain));
  if (it == index.end()) throw IntegrityError("subdivision cell lookup failed");
  return it->second;
}

SdResult sd(SSetPtr X) {
  SdResult R;
  R.base_space = X;
  auto S = std::make_shared<SimplicialSet>();

  auto record = [&](std::uint32_t x, std::vector<std::uint32_t> chain, std::uint32_t id) {
    R.index.emplace(pack_key(x, chain), id);
    R.base.push_back(x);
    R.masks.push_back(std::move(chain));
  };

  for (std::uint32_t x = 0; x < X->size(); ++x) {
    std::uint32_t id = S->add_simplex(0, {});
    record(x, {}, id);
  }

  std::vector<std::uint32_t> chain;
  for (int p = 1; p <= X->dimension(); ++p) {
    for (std::uint32_t x = 0; x < X->size(); ++x) {
      const int n = X->dim(x);
      if (n < p) continue;
      const std::uint32_t full = low_bits(n + 1);
      chain.clear();
      // Depth-first over nested masks in lexicographic chain order.
      auto emit = [&]() {
        std::vector<SimplexRef> faces(static_cast<std::size_t>(p) + 1);
        std::vector<std::uint32_t> sub;
        for (int i = 0; i < p; ++i) {
          sub.clear();
          for (int j = 0; j < p; ++j)
            if (j != i) sub.push_back(chain[static_cast<std::size_t>(j)]);
          faces[static_cast<std::size_t>(i)] = {R.find(x, sub), 0};
        }
        const std::uint32_t g = chain.back();
        std::vector<int> vals = mask_elements(g);
        SimplexRef sel = X->apply_selection({x, 0}, vals);
        std::vector<int> u = word_surjection(sel.word, static_cast<int>(vals.size()) - 1);
        std::vector<std::uint32_t> inner(chain.begin(), chain.end() - 1);
        for (auto& m : inner) m = mask_reindex(m, g);
        PushedChain pc = push_chain(u, X->dim(sel.target), inner);
        faces[static_cast<std::size_t>(p)] = {R.find(sel.target, pc.chain), pc.word};
        std::uint32_t id = S->add_simplex(p, faces);
        record(x, chain, id);
      };
      auto rec = [&](auto&& self, int level, std::uint32_t prev) -> void {
        if (level == p) {
          emit();
          return;
        }
        const std::uint32_t room = full & ~prev;
        // Leave enough strictly larger proper subsets above this level.
        const int max_size = n + 1 - (p - 1 - level) - 1;
        for (std::uint32_t extra = (0u - room) & room; extra;
             extra = (extra - room) & room) {
          std::uint32_t next = prev | extra;
          if (next != full && std::popcount(next) <= max_size) {
            chain.push_back(next);
            self(self, level + 1, next);
            chain.pop_back();
          }
        }
      };
      rec(rec, 0, 0);
    }
  }
  if (X->basepoint()) S->set_basepoint(*X->basepoint());
  R.space = freeze(std::move(*S));

  std::vector<SimplexRef> lv(R.space->size());
  for (std::uint32_t c = 0; c < R.space->size(); ++c) {
    std::vector<int> vals;
    for (std::uint32_t m : R.masks[c]) vals.push_back(std::bit_width(m) - 1);
    vals.push_back(X->dim(R.base[c]));
    lv[c] = X->apply_selection({R.base[c], 0}, vals);
  }
  R.lastv = SimplicialMap{R.space, X, std::move(lv)};
  return R;
}

SimplicialMap sd_map(const SimplicialMap& f, const SdResult& sx, const SdResult& sy) {
  std::vector<SimplexRef> img(sx.space->size());
  for (std::uint32_t c = 0; c < sx.space->size(); ++c) {
    const SimplexRef& r = f.image[sx.base[c]];
    std::vector<int> u = word_surjection(r.word, f.dom->dim(sx.base[c]));
    PushedChain pc = push_chain(u, f.cod->dim(r.target), sx.masks[c]);
    img[c] = {sy.find(r.target, pc.chain), pc.word};
  }
  return SimplicialMap{sx.space, sy.space, std::move(img)};
}

} // namespace dioext
