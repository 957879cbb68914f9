#include "dioext/gmc.hpp"

#include "dioext/assets.hpp"
#include "dioext/models.hpp"

#include <algorithm>
#include <map>

namespace dioext {

SubsetWitness rim_witness(const SimplicialMap& rim) {
  SubsetWitness A;
  A.members.reserve(rim.image.size());
  for (const SimplexRef& r : rim.image) {
    if (r.word != 0) throw IntegrityError("rim is not an embedding");
    A.members.push_back(r.target);
  }
  std::sort(A.members.begin(), A.members.end());
  if (std::adjacent_find(A.members.begin(), A.members.end()) != A.members.end())
    throw IntegrityError("rim is not injective");
  return A;
}

Gmc gmc_from_map(const SimplicialMap& f, const std::string& tag) {
  CylinderResult c = cylinder(f, true);
  Gmc M;
  M.total = c.space;
  M.upper = c.i_upper;
  M.lower = c.i_lower;
  M.class_tag = tag;
  return M;
}

Gmc opposite(const Gmc& M) {
  if (!homology_iso_check(M.upper))
    throw PreconditionError("opposite: upper rim is not a homology equivalence");
  Gmc R;
  R.total = M.total;
  R.upper = M.lower;
  R.lower = M.upper;
  R.class_tag = "op(" + M.class_tag + ")";
  return R;
}

Gmc compose(const Gmc& N, const Gmc& M) {
  if (!(*M.lower.dom == *N.upper.dom))
    throw FormError("compose: middle rim encodings differ");

  SubsetWitness A = rim_witness(M.lower);
  // member id in M.total -> the middle-space simplex it came from
  std::map<std::uint32_t, std::uint32_t> from;
  for (std::uint32_t y = 0; y < M.lower.image.size(); ++y)
    from[M.lower.image[y].target] = y;
  std::vector<SimplexRef> images;
  images.reserve(A.members.size());
  for (std::uint32_t t : A.members) images.push_back(N.upper.image[from.at(t)]);

  AttachResult at = attach(M.total, A, images, N.total);
  Gmc R;
  R.total = at.space;
  R.upper = compose(at.quotient_map(M.total), M.upper);
  R.lower = compose(at.inclusion(N.total), N.lower);
  R.class_tag = N.class_tag + "*" + M.class_tag;
  return R;
}

SimplicialMap fold_map(const WedgeResult& w) {
  SSetPtr Y = w.inclusions.at(0).dom;
  for (const SimplicialMap& inc : w.inclusions)
    if (!(*inc.dom == *Y)) throw FormError("fold: summands differ");
  SimplicialMap f;
  f.dom = w.space;
  f.cod = Y;
  f.image.assign(w.space->size(), SimplexRef{*Y->basepoint(), 0});
  for (const SimplicialMap& inc : w.inclusions)
    for (std::uint32_t y = 0; y < inc.image.size(); ++y)
      f.image[inc.image[y].target] = SimplexRef{y, 0};
  return f;
}

Gmc wedge_gmc(const std::vector<Gmc>& Ms) {
  if (Ms.empty()) throw DomainError("wedge_gmc: empty input");
  SSetPtr Y = Ms[0].lower.dom;
  for (const Gmc& M : Ms)
    if (!(*M.lower.dom == *Y)) throw FormError("wedge_gmc: lower rims differ");
  const std::size_t m = Ms.size();

  std::vector<SSetPtr> totals, uppers;
  for (const Gmc& M : Ms) {
    totals.push_back(M.total);
    uppers.push_back(M.upper.dom);
  }
  WedgeResult wt = wedge(totals);
  WedgeResult wx = wedge(uppers);
  WedgeResult wy = wedge(std::vector<SSetPtr>(m, Y));
  CylinderResult fc = cylinder(fold_map(wy), true);

  // Glue the wedge of lower rims onto the fold cylinder's upper rim.
  std::map<std::uint32_t, SimplexRef> glue;
  for (std::size_t i = 0; i < m; ++i)
    for (std::uint32_t y = 0; y < Y->size(); ++y) {
      SimplexRef t = wt.inclusions[i].apply(Ms[i].lower.image[y]);
      if (t.word != 0) throw IntegrityError("wedge_gmc: rim is not an embedding");
      glue[t.target] = fc.i_upper.image[wy.inclusions[i].image[y].target];
    }
  if (glue.size() != m * (Y->size() - 1) + 1)
    throw IntegrityError("wedge_gmc: rims overlap beyond the basepoint");
  SubsetWitness A;
  std::vector<SimplexRef> images;
  for (const auto& [t, img] : glue) {
    A.members.push_back(t);
    images.push_back(img);
  }
  AttachResult at = attach(wt.space, A, images, fc.space);
  SimplicialMap qm = at.quotient_map(wt.space);

  Gmc R;
  R.total = at.space;
  R.upper.dom = wx.space;
  R.upper.cod = at.space;
  R.upper.image.assign(wx.space->size(), SimplexRef{});
  for (std::size_t i = 0; i < m; ++i)
    for (std::uint32_t x = 0; x < uppers[i]->size(); ++x)
      R.upper.image[wx.inclusions[i].image[x].target] =
          qm.apply(wt.inclusions[i].apply(Ms[i].upper.image[x]));
  R.lower = compose(at.inclusion(fc.space), fc.i_lower);
  R.class_tag = "wedge";
  for (const Gmc& M : Ms) R.class_tag += ":" + M.class_tag;
  return R;
}

Gmc sum_gmc(const std::vector<Gmc>& Ms) {
  if (Ms.empty()) throw DomainError("sum_gmc: empty input");
  int p = Ms[0].upper.dom->dimension();
  SSetPtr S = sphere(p);
  for (const Gmc& M : Ms)
    if (!(*M.upper.dom == *S)) throw FormError("sum_gmc: upper rim is not the sphere model");

  ChainQuotient cq = chain_quotient(p, static_cast<int>(Ms.size()));
  Gmc Gq = opposite(gmc_from_map(cq.q, "collapse"));
  Gmc Gd = gmc_from_map(cq.delta, "pinch");
  Gmc R = compose(wedge_gmc(Ms), compose(Gd, Gq));
  R.class_tag = "sum";
  for (const Gmc& M : Ms) R.class_tag += ":" + M.class_tag;
  return R;
}

Gmc power2_degree_gmc(int p, const BigInt& c) {
  if (c == 0) throw DomainError("power2_degree_gmc: zero degree");
  BigInt a = abs(c);
  unsigned d = boost::multiprecision::msb(a);
  if (a != BigInt(1) << d) throw DomainError("power2_degree_gmc: degree is not +-2^d");

  Gmc R = gmc_from_map(identity_map(sphere(p)), "id");
  for (unsigned k = 0; k < d; ++k) R = compose(degree_two_gmc(p), R);
  if (c < 0) R = compose(degree_minus_one_gmc(p), R);
  R.class_tag = "deg(" + c.str() + ")";
  if (gmc_degree(R, p) != c) throw IntegrityError("power2_degree_gmc: degree oracle mismatch");
  return R;
}

Gmc int_combination_gmc(const std::vector<Gmc>& generators, const std::vector<BigInt>& c) {
  if (generators.size() != c.size())
    throw DomainError("int_combination_gmc: coefficient count mismatch");
  if (generators.empty()) throw DomainError("int_combination_gmc: empty input");
  SSetPtr Y = generators[0].lower.dom;
  int p = generators[0].upper.dom->dimension();
  SSetPtr S = sphere(p);
  for (const Gmc& G : generators) {
    if (!(*G.lower.dom == *Y)) throw FormError("int_combination_gmc: lower rims differ");
    if (!(*G.upper.dom == *S))
      throw FormError("int_combination_gmc: upper rim is not the sphere model");
  }

  std::vector<Gmc> parts;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigInt a = abs(c[i]);
    for (unsigned k = 0; k <= boost::multiprecision::msb(a); ++k) {
      if (!boost::multiprecision::bit_test(a, k)) continue;
      BigInt term = BigInt(1) << k;
      if (c[i] < 0) term = -term;
      parts.push_back(compose(generators[i], power2_degree_gmc(p, term)));
    }
  }
  if (parts.empty()) parts.push_back(gmc_from_map(constant_map(S, Y), "const"));
  return sum_gmc(parts);
}

CellAttachment attach_cells_via_gmc(const Gmc& M) {
  const SimplicialSet& X = *M.upper.dom;
  auto counts = X.counts_by_dim();
  if (counts.empty() || counts[0] != 1 || !X.basepoint())
    throw FormError("attach_cells_via_gmc: upper rim is not a wedge of sphere models");
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    int d = X.dim(id);
    if (d == 0) continue;
    for (int i = 0; i <= d; ++i)
      if (!(X.face(id, i) == degenerate_vertex(*X.basepoint(), d - 1)))
        throw FormError("attach_cells_via_gmc: upper rim is not a wedge of sphere models");
  }

  AttachResult at = quotient(M.total, rim_witness(M.upper));
  CellAttachment out;
  out.space = at.space;
  out.collapse_upper = at.quotient_map(M.total);
  out.include_lower = compose(out.collapse_upper, M.lower);
  return out;
}

namespace {

bool wedge_of_models(const SimplicialSet& X, int p) {
  if (!X.basepoint()) return false;
  auto counts = X.counts_by_dim();
  if (counts.empty() || counts[0] != 1) return false;
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    int d = X.dim(id);
    if (d == 0) continue;
    if (d != p) return false;
    for (int i = 0; i <= d; ++i)
      if (!(X.face(id, i) == degenerate_vertex(*X.basepoint(), d - 1))) return false;
  }
  return true;
}

} // namespace

AttachedCupBases attach_with_cup_bases(const Gmc& M) {
  if (!wedge_of_models(*M.upper.dom, 3))
    throw FormError("attach_with_cup_bases: upper rim is not a wedge of 3-sphere models");
  if (!wedge_of_models(*M.lower.dom, 2))
    throw FormError("attach_with_cup_bases: lower rim is not a wedge of 2-sphere models");

  AttachedCupBases out;
  out.at = attach_cells_via_gmc(M);
  out.gens2 = chain_map_matrix(out.at.include_lower, 2);

  // A 4-chain bounding each upper summand in the total space turns into a
  // cycle once the rim collapses; its class generates the attached cell's
  // slot in H_4 of the quotient.
  ChainIndex it = chain_index(*M.total);
  std::optional<IntMatrix> Z =
      solve_integer(boundary_matrix(*M.total, it, 4), chain_map_matrix(M.upper, 3));
  if (!Z)
    throw IntegrityError("attach_with_cup_bases: upper rim does not bound in the total space");
  out.gens4 = chain_map_matrix(out.at.collapse_upper, 4).mul(*Z);
  return out;
}

IntMatrix gmc_induced_matrix(const Gmc& M, int p) {
  HomologyBasis bt = homology_basis(*M.total, p);
  HomologyBasis bx = homology_basis(*M.upper.dom, p);
  HomologyBasis by = homology_basis(*M.lower.dom, p);
  for (const HomologyBasis* b : {&bt, &bx, &by})
    for (const BigInt& f : b->factors)
      if (f != 0) throw PreconditionError("gmc_induced_matrix: homology is not free");
  IntMatrix U = induced_matrix(M.upper, bx, bt);
  IntMatrix L = induced_matrix(M.lower, by, bt);
  std::optional<IntMatrix> D = solve_integer(L, U);
  if (!D) throw IntegrityError("gmc_induced_matrix: lower rim does not carry the upper class");
  return *D;
}

BigInt gmc_degree(const Gmc& M, int p) {
  IntMatrix D = gmc_induced_matrix(M, p);
  if (D.rows != 1 || D.cols != 1)
    throw PreconditionError("gmc_degree: rims are not homology spheres");
  return D.at(0, 0);
}

CupMatrix gmc_cup_form(const Gmc& M) {
  AttachedCupBases ab = attach_with_cup_bases(M);
  return cup_matrix(*ab.at.space, ab.gens2, ab.gens4);
}

BigInt gmc_hopf_invariant(const Gmc& M) {
  auto sphere_homology = [](const SimplicialSet& X, int p) {
    std::vector<HomologyGroup> h = homology(X);
    if (static_cast<int>(h.size()) <= p) return false;
    for (int q = 0; q < static_cast<int>(h.size()); ++q) {
      std::size_t want = (q == 0 || q == p) ? 1 : 0;
      if (h[static_cast<std::size_t>(q)].betti != want ||
          !h[static_cast<std::size_t>(q)].torsion.empty())
        return false;
    }
    return true;
  };
  if (!sphere_homology(*M.upper.dom, 3) || !sphere_homology(*M.lower.dom, 2))
    throw PreconditionError("gmc_hopf_invariant: rims are not a 3-sphere over a 2-sphere");
  CupMatrix cm = gmc_cup_form(M);
  if (cm.r != 1 || cm.s != 1)
    throw PreconditionError("gmc_hopf_invariant: quotient cohomology has the wrong rank");
  return cm.entry(0, 0)[0];
}

SimplicialMap top_cell_collapse(SSetPtr X, std::uint32_t top, int p) {
  if (X->dim(top) != p) throw DomainError("top_cell_collapse: cell dimension mismatch");
  SimplicialMap f;
  f.dom = X;
  f.cod = sphere(p);
  f.image.reserve(X->size());
  for (std::uint32_t id = 0; id < X->size(); ++id)
    f.image.push_back(id == top ? SimplexRef{1, 0} : degenerate_vertex(0, X->dim(id)));
  check_map(f, X->basepoint().has_value());
  return f;
}

} // namespace dioext
