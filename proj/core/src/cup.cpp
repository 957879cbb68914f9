#include "dioext/cup.hpp"

#include "dioext/cylinder.hpp"

namespace dioext {

namespace {

bool group_is(const HomologyGroup& g, std::size_t betti) {
  return g.betti == betti && g.torsion.empty();
}

HomologyGroup group_at(const std::vector<HomologyGroup>& h, std::size_t p) {
  return p < h.size() ? h[p] : HomologyGroup{};
}

} // namespace

CupMatrix cup_matrix(const SimplicialSet& X) {
  return cup_matrix(X, homology_basis(X, 2).cycles, homology_basis(X, 4).cycles);
}

CupMatrix cup_matrix(const SimplicialSet& X, const IntMatrix& gens2,
                     const IntMatrix& gens4) {
  std::vector<HomologyGroup> h = homology(X);
  if (!group_is(group_at(h, 1), 0) || !group_is(group_at(h, 3), 0))
    throw PreconditionError("cup matrix needs H_1 = H_3 = 0");
  if (!group_at(h, 2).torsion.empty() || !group_at(h, 4).torsion.empty())
    throw PreconditionError("cup matrix needs torsion-free H_2 and H_4");
  if (gens2.cols != group_at(h, 2).betti || gens4.cols != group_at(h, 4).betti)
    throw PreconditionError("cup matrix: generator counts do not match the betti numbers");

  ChainIndex ix = chain_index(X);
  const std::vector<std::uint32_t> no_cells;
  const auto& cells4 = ix.cells.size() > 4 ? ix.cells[4] : no_cells;
  const std::size_t c2 = ix.cells.size() > 2 ? ix.cells[2].size() : 0;
  if (gens2.rows != c2 || gens4.rows != cells4.size())
    throw PreconditionError("cup matrix: generator rows do not match the chain ranks");
  if (!boundary_matrix(X, ix, 2).mul(gens2).is_zero() ||
      !boundary_matrix(X, ix, 4).mul(gens4).is_zero())
    throw PreconditionError("cup matrix: generator columns are not cycles");

  CupMatrix out;
  out.r = gens2.cols;
  out.s = gens4.cols;
  out.entries.assign(out.r * out.r, std::vector<BigInt>(out.s));
  if (out.r == 0) return out;

  // Dual cocycles: kill boundaries of 3-simplices, hit delta on the cycle
  // basis.  Torsion-freeness makes the integer system solvable.
  IntMatrix d3t = boundary_matrix(X, ix, 3).transpose();
  IntMatrix A(d3t.rows + out.r, c2);
  IntMatrix B(d3t.rows + out.r, out.r);
  for (std::size_t i = 0; i < d3t.rows; ++i)
    for (std::size_t j = 0; j < c2; ++j) A.at(i, j) = d3t.at(i, j);
  for (std::size_t i = 0; i < out.r; ++i) {
    for (std::size_t j = 0; j < c2; ++j) A.at(d3t.rows + i, j) = gens2.at(j, i);
    B.at(d3t.rows + i, i) = 1;
  }
  std::optional<IntMatrix> U = solve_integer(std::move(A), std::move(B));
  if (!U) throw IntegrityError("dual cocycle solve failed");

  for (std::size_t m = 0; m < cells4.size(); ++m) {
    SimplexRef front = X.apply_selection({cells4[m], 0}, {0, 1, 2});
    SimplexRef back = X.apply_selection({cells4[m], 0}, {2, 3, 4});
    if (front.word != 0 || back.word != 0) continue;
    std::size_t fp = ix.pos[front.target];
    std::size_t bp = ix.pos[back.target];
    for (std::size_t i = 0; i < out.r; ++i)
      for (std::size_t j = 0; j < out.r; ++j) {
        BigInt v = U->at(fp, i) * U->at(bp, j);
        if (v == 0) continue;
        auto& e = out.entries[i * out.r + j];
        for (std::size_t k = 0; k < out.s; ++k) e[k] += v * gens4.at(m, k);
      }
  }
  return out;
}

BigInt hopf_invariant(const SimplicialMap& f) {
  auto sphere_like = [](const SimplicialSet& X, std::size_t p) {
    std::vector<HomologyGroup> h = homology(X);
    for (std::size_t q = 0; q < h.size(); ++q) {
      std::size_t want = (q == 0 || q == p) ? 1 : 0;
      if (!group_is(h[q], want)) return false;
    }
    return h.size() > p;
  };
  if (!sphere_like(*f.dom, 3) || !sphere_like(*f.cod, 2))
    throw PreconditionError("hopf invariant needs a 3-sphere to 2-sphere map");
  ConeResult c = cone(f, true);
  CupMatrix m = cup_matrix(*c.space);
  if (m.r != 1 || m.s != 1)
    throw PreconditionError("hopf invariant cone ranks unexpected");
  return m.entry(0, 0)[0];
}

} // namespace dioext
