#include "dioext/models.hpp"

#include "dioext/attach.hpp"

#include <algorithm>
#include <map>

namespace dioext {

SSetPtr point() {
  SimplicialSet P;
  P.add_simplex(0, {});
  P.set_basepoint(0);
  return freeze(std::move(P));
}

SSetPtr delta(int p) {
  if (p < 0) throw DomainError("delta: negative dimension");
  if (p > 20) throw ResourceError("delta: dimension too large");
  std::vector<std::uint32_t> id_of(1u << (p + 1), 0);
  SimplicialSet D;
  for (int k = 0; k <= p; ++k) {
    for (std::uint32_t m = 0; m < (1u << (p + 1)); ++m) {
      if (__builtin_popcount(m) != k + 1) continue;
      std::vector<SimplexRef> fs;
      if (k > 0) {
        // face i drops the i-th smallest vertex
        for (std::uint32_t bit = 0; bit <= static_cast<std::uint32_t>(p); ++bit) {
          if (!(m & (1u << bit))) continue;
          fs.push_back(SimplexRef{id_of[m & ~(1u << bit)], 0});
        }
      }
      id_of[m] = D.add_simplex(k, fs);
    }
  }
  D.set_basepoint(0);
  return freeze(std::move(D));
}

SubsetWitness boundary_delta_witness(int p) {
  if (p < 1) throw DomainError("boundary_delta_witness: p must be >= 1");
  SubsetWitness w;
  std::uint32_t count = (1u << (p + 1)) - 1; // nonempty subsets
  for (std::uint32_t id = 0; id + 1 < count; ++id) w.members.push_back(id);
  return w;
}

SSetPtr sphere(int p) {
  if (p < 0) throw DomainError("sphere: negative dimension");
  SimplicialSet S;
  S.add_simplex(0, {});
  if (p == 0) {
    S.add_simplex(0, {});
  } else {
    std::vector<SimplexRef> fs(static_cast<std::size_t>(p) + 1, degenerate_vertex(0, p - 1));
    S.add_simplex(p, fs);
  }
  S.set_basepoint(0);
  return freeze(std::move(S));
}

SSetPtr complex_from_top_cells(int vertex_count, const std::vector<std::vector<int>>& tops) {
  if (vertex_count < 1) throw DomainError("complex_from_top_cells: no vertices");
  // Collect all nonempty subtuples, grouped by dimension, lex within.
  std::map<std::vector<std::uint32_t>, std::uint32_t> id_of;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_dim;
  auto note = [&](const std::vector<std::uint32_t>& vs) {
    if (by_dim.size() < vs.size()) by_dim.resize(vs.size());
    if (id_of.emplace(vs, 0).second) by_dim[vs.size() - 1].push_back(vs);
  };
  for (int v = 0; v < vertex_count; ++v) note({static_cast<std::uint32_t>(v)});
  for (const std::vector<int>& top : tops) {
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (top[i] < 0 || top[i] >= vertex_count) throw DomainError("top cell vertex out of range");
      if (i > 0 && top[i] <= top[i - 1]) throw DomainError("top cell not strictly increasing");
    }
    std::uint32_t n = static_cast<std::uint32_t>(top.size());
    for (std::uint32_t sub = 1; sub < (1u << n); ++sub) {
      std::vector<std::uint32_t> vs;
      for (std::uint32_t i = 0; i < n; ++i)
        if (sub & (1u << i)) vs.push_back(static_cast<std::uint32_t>(top[i]));
      note(vs);
    }
  }
  SimplicialSet C;
  for (auto& bucket : by_dim) {
    std::sort(bucket.begin(), bucket.end());
    for (const auto& vs : bucket) {
      std::vector<SimplexRef> fs;
      if (vs.size() > 1) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
          std::vector<std::uint32_t> sub = vs;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
          fs.push_back(SimplexRef{id_of.at(sub), 0});
        }
      }
      id_of[vs] = C.add_simplex(static_cast<int>(vs.size()) - 1, fs);
    }
  }
  C.set_basepoint(0);
  return freeze(std::move(C));
}

std::uint32_t complex_find(const SimplicialSet& X, const std::vector<std::uint32_t>& vertices) {
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    if (X.dim(id) + 1 != static_cast<int>(vertices.size())) continue;
    if (X.vertices_of(id) == vertices) return id;
  }
  throw IntegrityError("complex_find: no simplex with the given vertices");
}

ChainModel chain_model(int p, int m) {
  if (p < 1 || m < 1) throw DomainError("chain_model: need p >= 1 and m >= 1");
  int nv = (m + 1) + (p - 1); // path vertices, then apexes
  std::vector<std::vector<int>> tops;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> t = {i - 1, i};
    for (int a = 0; a < p - 1; ++a) t.push_back(m + 1 + a);
    tops.push_back(t);
  }
  ChainModel out;
  out.chain = complex_from_top_cells(nv, tops);
  for (const std::vector<int>& t : tops) {
    std::vector<std::uint32_t> vs(t.begin(), t.end());
    out.copy_ids.push_back(complex_find(*out.chain, vs));
  }
  std::vector<std::uint32_t> seeds;
  for (int i = 0; i < m; ++i) {
    std::uint32_t c = out.copy_ids[static_cast<std::size_t>(i)];
    for (int j = 2; j <= p; ++j) seeds.push_back(out.chain->face(c, j).target);
  }
  seeds.push_back(out.chain->face(out.copy_ids.front(), 1).target);
  seeds.push_back(out.chain->face(out.copy_ids.back(), 0).target);
  out.boundary = face_closure(*out.chain, std::move(seeds));
  return out;
}

ChainQuotient chain_quotient(int p, int m) {
  ChainModel cm = chain_model(p, m);
  AttachResult q = quotient(cm.chain, cm.boundary);

  ChainQuotient out;
  out.space = q.space;
  for (std::uint32_t c : cm.copy_ids) {
    SimplexRef r = q.from_base[c];
    if (r.word != 0) throw IntegrityError("chain_quotient: top cell collapsed");
    out.copy_cells.push_back(r.target);
  }

  out.sphere_target = sphere(p);
  out.q.dom = out.space;
  out.q.cod = out.sphere_target;
  out.q.image.reserve(out.space->size());
  for (std::uint32_t id = 0; id < out.space->size(); ++id)
    out.q.image.push_back(degenerate_vertex(0, out.space->dim(id)));
  out.q.image[out.copy_cells.front()] = SimplexRef{1, 0};

  std::vector<SSetPtr> summands(static_cast<std::size_t>(m), out.sphere_target);
  WedgeResult w = wedge(summands);
  out.wedge_target = w.space;
  out.delta.dom = out.space;
  out.delta.cod = out.wedge_target;
  out.delta.image.reserve(out.space->size());
  for (std::uint32_t id = 0; id < out.space->size(); ++id)
    out.delta.image.push_back(degenerate_vertex(0, out.space->dim(id)));
  for (int i = 0; i < m; ++i)
    out.delta.image[out.copy_cells[static_cast<std::size_t>(i)]] =
        w.inclusions[static_cast<std::size_t>(i)].image[1];
  return out;
}

} // namespace dioext
