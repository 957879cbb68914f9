#include "dioext/homology.hpp"

#include "dioext/cylinder.hpp"

#include <algorithm>

namespace dioext {

namespace {

std::size_t bucket_size(const ChainIndex& ix, int p) {
  if (p < 0 || p >= static_cast<int>(ix.cells.size())) return 0;
  return ix.cells[static_cast<std::size_t>(p)].size();
}

} // namespace

ChainIndex chain_index(const SimplicialSet& X) {
  ChainIndex ix;
  ix.cells.resize(static_cast<std::size_t>(X.dimension()) + 1);
  ix.pos.resize(X.size());
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    auto& bucket = ix.cells[static_cast<std::size_t>(X.dim(id))];
    ix.pos[id] = bucket.size();
    bucket.push_back(id);
  }
  return ix;
}

SparseMatrix boundary_sparse(const SimplicialSet& X, const ChainIndex& ix, int p) {
  SparseMatrix m;
  m.rows = bucket_size(ix, p - 1);
  m.cols = bucket_size(ix, p);
  if (p <= 0 || p >= static_cast<int>(ix.cells.size())) return m;
  const auto& bucket = ix.cells[static_cast<std::size_t>(p)];
  for (std::size_t j = 0; j < bucket.size(); ++j) {
    std::uint32_t id = bucket[j];
    for (int i = 0; i <= p; ++i) {
      SimplexRef r = X.face(id, i);
      if (r.word != 0) continue;
      m.add(ix.pos[r.target], j, (i % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

IntMatrix boundary_matrix(const SimplicialSet& X, const ChainIndex& ix, int p) {
  return boundary_sparse(X, ix, p).dense();
}

std::vector<HomologyGroup> homology(const SimplicialSet& X) {
  ChainIndex ix = chain_index(X);
  int dim = X.dimension();
  std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
  std::vector<std::vector<BigInt>> tors(static_cast<std::size_t>(dim) + 2);
  for (int p = 1; p <= dim; ++p) {
    SnfDiagonal s = snf_diagonal(boundary_sparse(X, ix, p));
    rank[static_cast<std::size_t>(p)] = s.rank;
    for (const BigInt& d : s.diagonal)
      if (d > 1) tors[static_cast<std::size_t>(p)].push_back(d);
  }
  std::vector<HomologyGroup> out(static_cast<std::size_t>(dim) + 1);
  for (int p = 0; p <= dim; ++p) {
    auto& g = out[static_cast<std::size_t>(p)];
    g.betti = bucket_size(ix, p) - rank[static_cast<std::size_t>(p)] -
              rank[static_cast<std::size_t>(p) + 1];
    g.torsion = tors[static_cast<std::size_t>(p) + 1];
  }
  return out;
}

HomologyGroup homology_group(const SimplicialSet& X, int p) {
  if (p < 0 || p > X.dimension()) return {};
  ChainIndex ix = chain_index(X);
  std::size_t rank_in = p > 0 ? snf_diagonal(boundary_sparse(X, ix, p)).rank : 0;
  HomologyGroup g;
  std::size_t rank_out = 0;
  if (p < X.dimension()) {
    SnfDiagonal s = snf_diagonal(boundary_sparse(X, ix, p + 1));
    rank_out = s.rank;
    for (const BigInt& d : s.diagonal)
      if (d > 1) g.torsion.push_back(d);
  }
  g.betti = bucket_size(ix, p) - rank_in - rank_out;
  return g;
}

HomologyBasis homology_basis(const SimplicialSet& X, int p) {
  ChainIndex ix = chain_index(X);
  HomologyBasis out;
  out.degree = p;
  if (p >= 0 && p < static_cast<int>(ix.cells.size()))
    out.cells = ix.cells[static_cast<std::size_t>(p)];
  const std::size_t cp = bucket_size(ix, p);

  IntMatrix A = boundary_matrix(X, ix, p);
  IntMatrix B = boundary_matrix(X, ix, p + 1);
  SnfOptions right;
  right.track_right = true;
  SnfResult sa = snf(std::move(A), right);

  const std::size_t k = cp - sa.rank; // cycle space dimension
  IntMatrix K(cp, k), P0(k, cp);
  for (std::size_t r = 0; r < cp; ++r)
    for (std::size_t i = 0; i < k; ++i) {
      K.at(r, i) = sa.V.at(r, sa.rank + i);
      P0.at(i, r) = sa.V_inv.at(sa.rank + i, r);
    }

  SnfOptions left;
  left.track_left = true;
  SnfResult sy = snf(P0.mul(B), left);

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt f = i < sy.rank ? sy.diagonal[i] : BigInt(0);
    if (f == 1) continue;
    keep.push_back(i);
    out.factors.push_back(std::move(f));
  }

  IntMatrix cyclesFull = K.mul(sy.U_inv);
  IntMatrix coordsFull = sy.U.mul(P0);
  out.cycles = IntMatrix(cp, keep.size());
  out.coords = IntMatrix(keep.size(), cp);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    for (std::size_t r = 0; r < cp; ++r) {
      out.cycles.at(r, j) = cyclesFull.at(r, keep[j]);
      out.coords.at(j, r) = coordsFull.at(keep[j], r);
    }
    for (std::size_t r = 0; r < cp; ++r) {
      const BigInt& v = out.cycles.at(r, j);
      if (v == 0) continue;
      if (v < 0) {
        for (std::size_t r2 = 0; r2 < cp; ++r2) {
          out.cycles.at(r2, j) = -out.cycles.at(r2, j);
          out.coords.at(j, r2) = -out.coords.at(j, r2);
        }
      }
      break;
    }
  }
  return out;
}

IntMatrix chain_map_matrix(const SimplicialMap& f, int p) {
  ChainIndex dx = chain_index(*f.dom);
  ChainIndex dy = chain_index(*f.cod);
  IntMatrix m(bucket_size(dy, p), bucket_size(dx, p));
  if (p < 0 || p >= static_cast<int>(dx.cells.size())) return m;
  const auto& bucket = dx.cells[static_cast<std::size_t>(p)];
  for (std::size_t j = 0; j < bucket.size(); ++j) {
    const SimplexRef& r = f.image[bucket[j]];
    if (r.word != 0) continue;
    m.at(dy.pos[r.target], j) += 1;
  }
  return m;
}

IntMatrix induced_matrix(const SimplicialMap& f, const HomologyBasis& bx,
                         const HomologyBasis& by) {
  if (bx.degree != by.degree) throw PreconditionError("induced matrix degree mismatch");
  IntMatrix F = chain_map_matrix(f, bx.degree);
  IntMatrix M = by.coords.mul(F).mul(bx.cycles);
  for (std::size_t i = 0; i < M.rows; ++i) {
    const BigInt& d = by.factors[i];
    if (d == 0) continue;
    for (std::size_t j = 0; j < M.cols; ++j) {
      BigInt v = M.at(i, j) % d;
      if (v < 0) v += d;
      M.at(i, j) = std::move(v);
    }
  }
  return M;
}

IntMatrix induced_matrix(const SimplicialMap& f, int p) {
  return induced_matrix(f, homology_basis(*f.dom, p), homology_basis(*f.cod, p));
}

BigInt mapping_degree(const SimplicialMap& f, int p) {
  HomologyBasis bx = homology_basis(*f.dom, p);
  HomologyBasis by = homology_basis(*f.cod, p);
  auto free_rank_one = [](const HomologyBasis& b) {
    return b.factors.size() == 1 && b.factors[0] == 0;
  };
  if (!free_rank_one(bx) || !free_rank_one(by))
    throw PreconditionError("mapping degree needs free rank-1 homology on both sides");
  return induced_matrix(f, bx, by).at(0, 0);
}

bool reduced_check(const SimplicialSet& X, int k) {
  auto counts = X.counts_by_dim();
  if (counts.empty() || counts[0] != 1) return false;
  for (int d = 1; d <= k && d < static_cast<int>(counts.size()); ++d)
    if (counts[static_cast<std::size_t>(d)] != 0) return false;
  return true;
}

bool cone_vanishing_check(const SimplicialMap& f, int n) {
  ConeResult c = cone(f, true);
  std::vector<HomologyGroup> h = homology(*c.space);
  for (std::size_t p = 0; p < h.size() && p <= static_cast<std::size_t>(n); ++p) {
    if (!h[p].torsion.empty()) return false;
    if (h[p].betti != (p == 0 ? 1u : 0u)) return false;
  }
  return true;
}

bool homology_iso_check(const SimplicialMap& f) {
  int top = std::max(f.dom->dimension(), f.cod->dimension());
  for (int p = 0; p <= top; ++p) {
    HomologyBasis bx = homology_basis(*f.dom, p);
    HomologyBasis by = homology_basis(*f.cod, p);
    if (bx.factors != by.factors) return false;
    std::size_t k = bx.factors.size();
    if (k == 0) continue;
    IntMatrix A = induced_matrix(f, bx, by);
    // Surjectivity onto Z^k modulo the torsion relations.
    std::size_t rel = 0;
    for (const BigInt& d : by.factors)
      if (d != 0) ++rel;
    IntMatrix M(k, k + rel);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) M.at(i, j) = A.at(i, j);
    std::size_t c = k;
    for (std::size_t i = 0; i < k; ++i)
      if (by.factors[i] != 0) M.at(i, c++) = by.factors[i];
    SnfResult s = snf(std::move(M));
    if (s.rank != k) return false;
    for (const BigInt& d : s.diagonal)
      if (d != 1) return false;
  }
  return true;
}

} // namespace dioext
