// Builds the bundled Hopf map asset by the simplicial Hopf construction.
//
// A bidegree (1,1) simplicial multiplication mu: C_m x C_n -> S^1 on the
// staircase product of two polygon circles is found by exhaustive edge
// labelling: a simplicial map into the one-vertex circle is the same thing
// as a {0,1}-valued 1-cocycle, one label per edge with the long face of
// every triangle carrying the sum of the two short faces.  The 3-sphere is
// then assembled as the union of the two projection mapping cylinders of
// the torus, a genus one Heegaard splitting, and the Hopf construction maps
// both cylinders through mu into the cones of the suspension of S^1.
// Composing with a one-cell collapse of the suspension lands on the minimal
// one-cell 2-sphere model; the exact cone cup-square oracle certifies the
// invariant, which for bidegree (1,1) is +-1.

#include "dioext/attach.hpp"
#include "dioext/cup.hpp"
#include "dioext/errors.hpp"
#include "dioext/homology.hpp"
#include "dioext/models.hpp"
#include "dioext/product.hpp"
#include "dioext/smap.hpp"
#include "dioext/sset.hpp"
#include "dioext/sset_io.hpp"
#include "dioext/word.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace dioext;

namespace {

SSetPtr circle(int m) {
  std::vector<std::vector<int>> tops;
  for (int i = 0; i < m; ++i) {
    std::vector<int> e = {i, (i + 1) % m};
    std::sort(e.begin(), e.end());
    tops.push_back(std::move(e));
  }
  return complex_from_top_cells(m, tops);
}

// Entrywise image of (f x g) through the joint nondegeneracy normal form:
// factor out the positions where both components stall, renumbering the
// surviving stalls.
SimplexRef product_ref(const ProductResult& P, SimplexRef ra, SimplexRef rb) {
  DegWord c = ra.word & rb.word;
  DegWord wa = ra.word, wb = rb.word;
  for (int i = kMaxDim; i >= 0; --i)
    if (c & (DegWord(1) << i)) {
      wa = word_delete_bit(wa, i);
      wb = word_delete_bit(wb, i);
    }
  return {P.find(ra.target, rb.target, wa, wb), c};
}

SimplicialMap product_map(const ProductResult& P, const ProductResult& Q,
                          const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  h.dom = P.space;
  h.cod = Q.space;
  h.image.resize(P.space->size());
  for (std::uint32_t id = 0; id < P.space->size(); ++id) {
    const ProductEntry& e = P.entries[id];
    h.image[id] = product_ref(Q, f.apply({e.a, e.u}), g.apply({e.b, e.v}));
  }
  return h;
}

// X x {w} inside X x Delta^1.
struct Slice {
  SubsetWitness witness;
  std::vector<std::uint32_t> cell; // X id -> product id
};

Slice slice_of(const ProductResult& P, std::uint32_t w) {
  Slice s;
  s.cell.resize(P.left->size());
  for (std::uint32_t a = 0; a < P.left->size(); ++a) {
    s.cell[a] = P.find(a, w, 0, low_bits(P.left->dim(a)));
    s.witness.members.push_back(s.cell[a]);
  }
  std::sort(s.witness.members.begin(), s.witness.members.end());
  return s;
}

// Attach images aligned with the witness member order: member slice cell of
// the X cell a goes to image[a].
std::vector<SimplexRef> images_along(const Slice& s, const std::vector<SimplexRef>& image) {
  std::map<std::uint32_t, SimplexRef> by_id;
  for (std::uint32_t a = 0; a < s.cell.size(); ++a) by_id[s.cell[a]] = image[a];
  std::vector<SimplexRef> out;
  for (std::uint32_t mbr : s.witness.members) out.push_back(by_id.at(mbr));
  return out;
}

struct HopfBuild {
  SSetPtr domain;
  std::vector<SimplexRef> image;
  BigInt hopf = 0;
};

// Assemble the Hopf construction for one multiplication candidate and run
// the oracle; nullopt means the candidate was rejected.
std::optional<HopfBuild> assemble(const ProductResult& TP, const SimplicialMap& mu,
                                  SSetPtr Ck) {
  SSetPtr D1 = delta(1);
  SSetPtr T = TP.space;

  auto stage = [](const char* s) { std::cerr << "    [" << s << "]\n"; };
  ProductResult PT = product(T, D1);
  Slice t0 = slice_of(PT, 0), t1 = slice_of(PT, 1);
  AttachResult C1 = attach(PT.space, t0.witness, images_along(t0, TP.proj_left.image),
                           TP.left);
  AttachResult C2 = attach(PT.space, t0.witness, images_along(t0, TP.proj_right.image),
                           TP.right);

  ProductResult PK = product(Ck, D1);
  Slice k0 = slice_of(PK, 0), k1 = slice_of(PK, 1);
  std::vector<SimplexRef> to_point(Ck->size());
  for (std::uint32_t c = 0; c < Ck->size(); ++c)
    to_point[c] = degenerate_vertex(0, Ck->dim(c));
  AttachResult N = attach(PK.space, k0.witness, images_along(k0, to_point), point());

  // Suspension: two copies of the cone glued along the open (t = 1) rim.
  SubsetWitness eq;
  std::vector<SimplexRef> eq_img;
  {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t a = 0; a < Ck->size(); ++a)
      ids.push_back(N.from_base[k1.cell[a]].target);
    std::sort(ids.begin(), ids.end());
    eq.members = ids;
    for (std::uint32_t id : ids) eq_img.push_back({id, 0});
  }
  AttachResult SG = attach(N.space, eq, eq_img, N.space);
  SSetPtr Sigma = SG.space;

  // eta on either cylinder: the cone of mu over the product, constant on
  // the collapsed circle.
  SimplicialMap muhat = product_map(PT, PK, mu, identity_map(D1));
  SimplicialMap qN = N.quotient_map(PK.space);
  SimplicialMap topN = compose(qN, muhat); // T x Delta^1 -> cone
  std::uint32_t cone_pt = N.from_glued[0];

  auto cyl_eta = [&](const AttachResult& C, SSetPtr rim) {
    SimplicialMap e;
    e.dom = C.space;
    e.cod = N.space;
    e.image.resize(C.space->size());
    for (std::uint32_t y = 0; y < rim->size(); ++y)
      e.image[C.from_glued[y]] = degenerate_vertex(cone_pt, rim->dim(y));
    for (std::uint32_t c = 0; c < PT.space->size(); ++c) {
      SimplexRef r = C.from_base[c];
      if (r.word == 0) e.image[r.target] = topN.image[c];
    }
    return e;
  };
  SimplicialMap eta1 = cyl_eta(C1, TP.left);
  SimplicialMap eta2 = cyl_eta(C2, TP.right);

  // Heegaard gluing of the two cylinders along the free torus end.
  SubsetWitness glue;
  std::vector<SimplexRef> glue_img;
  {
    std::vector<std::pair<std::uint32_t, SimplexRef>> rows;
    for (std::uint32_t a = 0; a < T->size(); ++a)
      rows.push_back({C1.from_base[t1.cell[a]].target, C2.from_base[t1.cell[a]]});
    std::sort(rows.begin(), rows.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    for (const auto& [id, img] : rows) {
      glue.members.push_back(id);
      glue_img.push_back(img);
    }
  }
  AttachResult AX = attach(C1.space, glue, glue_img, C2.space);

  SimplicialMap north = compose(SG.quotient_map(N.space), eta1);
  SimplicialMap south = compose(SG.inclusion(N.space), eta2);
  SimplicialMap eta;
  eta.dom = AX.space;
  eta.cod = Sigma;
  eta.image.resize(AX.space->size());
  for (std::uint32_t y = 0; y < C2.space->size(); ++y)
    eta.image[AX.from_glued[y]] = south.image[y];
  for (std::uint32_t c = 0; c < C1.space->size(); ++c) {
    SimplexRef r = AX.from_base[c];
    if (r.word == 0) eta.image[r.target] = north.image[c];
  }

  // Collapse the suspension onto the one-cell 2-sphere model.
  SSetPtr S2 = sphere(2);
  SimplicialMap kappa;
  kappa.dom = Sigma;
  kappa.cod = S2;
  kappa.image.resize(Sigma->size());
  bool picked = false;
  for (std::uint32_t id = 0; id < Sigma->size(); ++id) {
    if (!picked && Sigma->dim(id) == 2) {
      kappa.image[id] = {1, 0};
      picked = true;
    } else {
      kappa.image[id] = degenerate_vertex(0, Sigma->dim(id));
    }
  }

  // Rebuild the domain with a basepoint, then certify end to end.
  SimplicialSet Xm = sset_from_text(sset_to_text(*AX.space));
  Xm.set_basepoint(0);
  SSetPtr X = freeze(std::move(Xm));

  HopfBuild out;
  out.domain = X;
  SimplicialMap f = compose(kappa, eta);
  f.dom = X;
  out.image = f.image;
  try {
    check_map(eta, false);
    check_map(kappa, false);
    check_map(f, true);
    auto hs = homology(*X);
    std::vector<HomologyGroup> want = {{1, {}}, {0, {}}, {0, {}}, {1, {}}};
    if (std::vector<HomologyGroup>(hs.begin(), hs.end()) != want) {
      std::cerr << "  candidate rejected: domain is not a homology 3-sphere\n";
      return std::nullopt;
    }
    out.hopf = hopf_invariant(f);
  } catch (const Error& e) {
    std::cerr << "  candidate rejected: " << e.what() << "\n";
    return std::nullopt;
  }
  if (out.hopf != 1 && out.hopf != -1) {
    std::cerr << "  candidate rejected: hopf = " << out.hopf.str() << "\n";
    return std::nullopt;
  }
  return out;
}

// Search {0,1} edge labellings of the torus that define a simplicial map to
// the one-vertex circle with winding +-1 around both factors, and run each
// one through the assembly.
std::optional<HopfBuild> search_torus(int m, int n, int max_builds) {
  SSetPtr Cm = circle(m), Cn = circle(n);
  SSetPtr S1 = sphere(1);
  ProductResult TP = product(Cm, Cn);
  SSetPtr T = TP.space;

  std::vector<std::uint32_t> edges, tris;
  for (std::uint32_t id = 0; id < T->size(); ++id) {
    if (T->dim(id) == 1) edges.push_back(id);
    if (T->dim(id) == 2) tris.push_back(id);
  }
  std::vector<int> pos(T->size(), -1); // edge id -> index in `edges`
  for (std::size_t e = 0; e < edges.size(); ++e) pos[edges[e]] = int(e);

  // triangle face edges, grouped by the latest assigned face
  struct Tri {
    std::uint32_t d0, d1, d2;
  };
  std::vector<std::vector<Tri>> by_last(edges.size());
  for (std::uint32_t t : tris) {
    Tri tr{T->face(t, 0).target, T->face(t, 1).target, T->face(t, 2).target};
    int last = std::max({pos[tr.d0], pos[tr.d1], pos[tr.d2]});
    by_last[last].push_back(tr);
  }

  // the two factor loops, as signed sequences of torus edges
  auto loop_edges = [&](bool row) {
    std::vector<std::pair<std::uint32_t, int>> out;
    int len = row ? m : n;
    SSetPtr C = row ? Cm : Cn;
    for (int i = 0; i < len; ++i) {
      std::vector<std::uint32_t> vs = {std::uint32_t(i), std::uint32_t((i + 1) % len)};
      std::sort(vs.begin(), vs.end());
      std::uint32_t a = complex_find(*C, vs);
      std::uint32_t id = row ? TP.find(a, 0, 0, 1) : TP.find(0, a, 1, 0);
      int sign = (C->vertices_of(a)[0] == std::uint32_t(i)) ? 1 : -1;
      out.push_back({id, sign});
    }
    return out;
  };
  auto row0 = loop_edges(true), col0 = loop_edges(false);

  std::vector<int> label(T->size(), 0);
  std::optional<HopfBuild> hit;
  long long leaves = 0, builds = 0;

  std::function<void(std::size_t)> go = [&](std::size_t e) {
    if (hit || builds >= max_builds) return;
    if (e == edges.size()) {
      ++leaves;
      int wr = 0, wc = 0;
      for (auto [id, s] : row0) wr += s * label[id];
      for (auto [id, s] : col0) wc += s * label[id];
      if (wr * wr != 1 || wc * wc != 1) return;

      SimplicialMap mu;
      mu.dom = T;
      mu.cod = S1;
      mu.image.resize(T->size());
      for (std::uint32_t id = 0; id < T->size(); ++id) {
        int d = T->dim(id);
        if (d == 0) {
          mu.image[id] = {0, 0};
        } else if (d == 1) {
          mu.image[id] = label[id] ? SimplexRef{1, 0} : degenerate_vertex(0, 1);
        } else {
          int b0 = label[T->face(id, 0).target];
          int b2 = label[T->face(id, 2).target];
          if (b0 == 0 && b2 == 0)
            mu.image[id] = degenerate_vertex(0, 2);
          else
            mu.image[id] = {1, DegWord(b2 ? 2 : 1)};
        }
      }
      try {
        check_map(mu, false);
      } catch (const Error&) {
        return;
      }
      ++builds;
      std::cerr << "  building candidate " << builds << " with windings (" << wr
                << ", " << wc << ")\n";
      auto r = assemble(TP, mu, S1);
      if (r) hit = std::move(r);
      return;
    }
    for (int v = 0; v <= 1; ++v) {
      label[edges[e]] = v;
      bool ok = true;
      for (const Tri& tr : by_last[e])
        if (label[tr.d1] != label[tr.d0] + label[tr.d2]) {
          ok = false;
          break;
        }
      if (ok) go(e + 1);
      if (hit || builds >= max_builds) return;
    }
    label[edges[e]] = 0;
  };
  go(0);
  std::cerr << "  " << leaves << " cocycles, " << builds << " assembled\n";
  return hit;
}

} // namespace

int main(int argc, char** argv) {
  std::string outdir = ".";
  int max_builds = 8;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--max-builds" && i + 1 < argc)
      max_builds = std::stoi(argv[++i]);
    else
      outdir = a;
  }

  const std::vector<std::array<int, 2>> params = {{3, 3}, {3, 4}, {4, 4}};

  std::optional<HopfBuild> hit;
  for (const auto& [m, n] : params) {
    std::cerr << "torus " << m << "x" << n << "\n";
    hit = search_torus(m, n, max_builds);
    if (hit) break;
  }
  if (!hit) {
    std::cerr << "no Hopf candidate certified\n";
    return 1;
  }

  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  fs::path dom_path = fs::path(outdir) / "hopf_domain.sset";
  fs::path tgt_path = fs::path(outdir) / "sphere2.sset";
  fs::path map_path = fs::path(outdir) / "hopf_map.smap";
  write_sset_file(dom_path.string(), *hit->domain);
  write_sset_file(tgt_path.string(), *sphere(2));
  SmapFile mf;
  mf.domain = "hopf_domain.sset";
  mf.codomain = "sphere2.sset";
  mf.image = hit->image;
  write_smap_file(map_path.string(), mf);

  std::cout << "hopf = " << hit->hopf.str() << ", domain has "
            << hit->domain->size() << " cells\n"
            << "wrote " << dom_path.string() << ", " << tgt_path.string()
            << ", " << map_path.string() << "\n";
  return 0;
}
