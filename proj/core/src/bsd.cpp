#include "dioext/bsd.hpp"

#include "dioext/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace dioext {

namespace {

std::vector<int> mask_elements(std::uint32_t m) {
  std::vector<int> e;
  for (int b = 0; b < 32; ++b)
    if (m & (1u << b)) e.push_back(b);
  return e;
}

int rank_in(std::uint32_t m, int b) { return std::popcount(m & low_bits(b)); }

// Selection data of one chain entry: the X-simplex it denotes.
struct Entry {
  std::uint32_t core = 0;
  std::vector<int> u; // surjection selection-positions -> core vertices
  std::uint32_t mask = 0;
};

} // namespace

std::uint32_t BsdResult::find_tuple(const std::vector<std::uint32_t>& t) const {
  const std::size_t n = t.size() - 1;
  if (n + 1 >= bucket_start.size()) throw IntegrityError("twofold cell lookup failed");
  std::uint32_t lo = bucket_start[n], hi = bucket_start[n + 1];
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    if (tuple[mid] < t)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == bucket_start[n + 1] || tuple[lo] != t)
    throw IntegrityError("twofold cell lookup failed");
  return lo;
}

BsdResult bsd(SSetPtr X) {
  BsdResult R;
  R.sd = sd(X);
  const SimplicialSet& S = *R.sd.space;
  const std::uint32_t N = S.size();
  const int sd_dim = std::max(S.dimension(), 0);

  R.cell_vertex.resize(N);
  R.vertex_cell.reserve(N);
  for (int L = sd_dim; L >= 0; --L)
    for (std::uint32_t c = 0; c < N; ++c)
      if (S.dim(c) == L) {
        R.cell_vertex[c] = static_cast<std::uint32_t>(R.vertex_cell.size());
        R.vertex_cell.push_back(c);
      }

  // All strict subchains of every sd cell, with the canonical comparison
  // operator of each pair.  A candidate subchain is forced position by
  // position from the nondegenerate top end; a position subset yields a
  // subchain exactly when every forced degeneracy exists.
  std::vector<std::vector<std::pair<std::uint32_t, std::vector<int>>>> adj(N);
  for (std::uint32_t s = 0; s < N; ++s) {
    const std::size_t k = R.sd.masks[s].size();
    if (k == 0) continue;
    const std::uint32_t x = R.sd.base[s];
    std::vector<Entry> ent(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
      std::uint32_t m = j < k ? R.sd.masks[s][j] : low_bits(X->dim(x) + 1);
      std::vector<int> elems = mask_elements(m);
      SimplexRef sel = X->apply_selection({x, 0}, elems);
      ent[j] = {sel.target, word_surjection(sel.word, static_cast<int>(elems.size()) - 1), m};
    }

    std::map<std::uint32_t, std::vector<int>> downs;
    std::vector<int> pos;
    for (std::uint32_t sm = 1; sm < (1u << (k + 1)) - 1; ++sm) {
      pos.clear();
      for (std::size_t j = 0; j <= k; ++j)
        if (sm & (1u << j)) pos.push_back(static_cast<int>(j));
      const int ell = static_cast<int>(pos.size()) - 1;

      const std::uint32_t y = ent[static_cast<std::size_t>(pos[static_cast<std::size_t>(ell)])].core;
      std::vector<int> h = ent[static_cast<std::size_t>(pos[static_cast<std::size_t>(ell)])].u;
      std::vector<int> cur(static_cast<std::size_t>(X->dim(y)) + 1);
      for (std::size_t t = 0; t < cur.size(); ++t) cur[t] = static_cast<int>(t);

      bool ok = true;
      std::vector<std::uint32_t> gmasks;
      for (int i = ell - 1; i >= 0 && ok; --i) {
        const Entry& lo_e = ent[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
        const Entry& hi_e = ent[static_cast<std::size_t>(pos[static_cast<std::size_t>(i + 1)])];
        std::vector<int> vals;
        for (int b : mask_elements(lo_e.mask))
          vals.push_back(h[static_cast<std::size_t>(rank_in(hi_e.mask, b))]);
        std::vector<int> img = vals;
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() == cur.size()) { // would be a codimension-0 face
          ok = false;
          break;
        }
        std::vector<int> next;
        for (int r : img) next.push_back(cur[static_cast<std::size_t>(r)]);
        std::vector<int> h2(vals.size());
        for (std::size_t t = 0; t < vals.size(); ++t)
          h2[t] = static_cast<int>(std::lower_bound(img.begin(), img.end(), vals[t]) -
                                   img.begin());
        SimplexRef sel = X->apply_selection({y, 0}, next);
        if (sel.target != lo_e.core) {
          ok = false;
          break;
        }
        std::vector<int> uv =
            word_surjection(sel.word, static_cast<int>(next.size()) - 1);
        for (std::size_t t = 0; t < vals.size() && ok; ++t)
          if (uv[static_cast<std::size_t>(h2[t])] != lo_e.u[t]) ok = false;
        if (!ok) break;
        std::uint32_t gm = 0;
        for (int e : next) gm |= 1u << e;
        gmasks.push_back(gm);
        cur = std::move(next);
        h = std::move(h2);
      }
      if (!ok) continue;

      std::reverse(gmasks.begin(), gmasks.end());
      std::uint32_t tau = R.sd.find(y, gmasks);
      std::vector<int> W;
      for (int b : mask_elements(ent[0].mask))
        W.push_back(h[static_cast<std::size_t>(
            rank_in(ent[static_cast<std::size_t>(pos[0])].mask, b))]);
      downs.emplace(tau, std::move(W));
    }

    auto& row = adj[R.cell_vertex[s]];
    for (auto& [tau, W] : downs) row.emplace_back(R.cell_vertex[tau], std::move(W));
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // Every descending path is a cell; depth-first from each vertex in id
  // order lists each length bucket lexicographically.
  std::vector<std::vector<std::vector<std::uint32_t>>> buckets(
      static_cast<std::size_t>(sd_dim) + 1);
  std::vector<std::uint32_t> path;
  auto dfs = [&](auto&& self, std::uint32_t u) -> void {
    path.push_back(u);
    buckets[path.size() - 1].push_back(path);
    for (const auto& e : adj[u]) self(self, e.first);
    path.pop_back();
  };
  for (std::uint32_t u = 0; u < N; ++u) dfs(dfs, u);

  SimplicialSet B;
  for (std::size_t n = 0; n < buckets.size(); ++n) {
    R.bucket_start.push_back(static_cast<std::uint32_t>(R.tuple.size()));
    for (auto& t : buckets[n]) {
      std::vector<SimplexRef> faces;
      if (n > 0) {
        std::vector<std::uint32_t> sub;
        for (std::size_t i = 0; i <= n; ++i) {
          sub.clear();
          for (std::size_t j = 0; j <= n; ++j)
            if (j != i) sub.push_back(t[j]);
          faces.push_back({R.find_tuple(sub), 0});
        }
      }
      B.add_simplex(static_cast<int>(n), faces);
      R.tuple.push_back(std::move(t));
    }
  }
  R.bucket_start.push_back(static_cast<std::uint32_t>(R.tuple.size()));
  if (X->basepoint()) B.set_basepoint(R.cell_vertex[*X->basepoint()]);
  R.space = freeze(std::move(B));

  // gamma: the last vertices of the chain bottoms, pushed through the
  // composed comparison operators into the final bottom simplex.
  auto w_of = [&](std::uint32_t uv, std::uint32_t vv) -> const std::vector<int>& {
    const auto& row = adj[uv];
    auto it = std::lower_bound(row.begin(), row.end(), vv,
                               [](const auto& a, std::uint32_t b) { return a.first < b; });
    if (it == row.end() || it->first != vv)
      throw IntegrityError("comparison operator lookup failed");
    return it->second;
  };
  auto bottom_dim = [&](std::uint32_t cell) {
    return R.sd.masks[cell].empty() ? X->dim(R.sd.base[cell])
                                    : std::popcount(R.sd.masks[cell][0]) - 1;
  };
  std::vector<SimplexRef> gimg(R.space->size());
  for (std::uint32_t id = 0; id < R.space->size(); ++id) {
    const auto& t = R.tuple[id];
    const std::size_t n = t.size() - 1;
    std::vector<int> vals(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      int p = bottom_dim(R.vertex_cell[t[i]]);
      for (std::size_t j = i; j < n; ++j) p = w_of(t[j], t[j + 1])[static_cast<std::size_t>(p)];
      vals[i] = p;
    }
    std::uint32_t last = R.vertex_cell[t[n]];
    std::uint32_t x = R.sd.base[last];
    std::vector<int> elems =
        mask_elements(R.sd.masks[last].empty() ? low_bits(X->dim(x) + 1)
                                               : R.sd.masks[last][0]);
    for (auto& v : vals) v = elems[static_cast<std::size_t>(v)];
    gimg[id] = X->apply_selection({x, 0}, vals);
  }
  R.gamma = SimplicialMap{R.space, X, std::move(gimg)};
  return R;
}

SimplicialMap bsd_map(const SimplicialMap& f, const BsdResult& bx, const BsdResult& by) {
  SimplicialMap sf = sd_map(f, bx.sd, by.sd);
  std::vector<SimplexRef> img(bx.space->size());
  for (std::uint32_t id = 0; id < bx.space->size(); ++id) {
    const auto& t = bx.tuple[id];
    std::vector<std::uint32_t> out;
    DegWord w = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::uint32_t v = by.cell_vertex[sf.image[bx.vertex_cell[t[i]]].target];
      if (!out.empty() && out.back() == v) {
        w |= 1u << (i - 1);
        continue;
      }
      if (!out.empty() && out.back() > v)
        throw IntegrityError("twofold image tuple not descending");
      out.push_back(v);
    }
    img[id] = {by.find_tuple(out), w};
  }
  return SimplicialMap{bx.space, by.space, std::move(img)};
}

} // namespace dioext
