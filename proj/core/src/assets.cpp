#include "dioext/assets.hpp"

#include "dioext/models.hpp"
#include "dioext/product.hpp"
#include "dioext/sset_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>

namespace dioext {

namespace {

std::mutex cache_mutex;

SimplicialMap two_sphere_fold(SSetPtr wedge2, SSetPtr S) {
  SimplicialMap f;
  f.dom = wedge2;
  f.cod = S;
  f.image = {SimplexRef{0, 0}, SimplexRef{1, 0}, SimplexRef{1, 0}};
  return f;
}

} // namespace

Gmc degree_two_gmc(int p) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  static std::map<int, Gmc> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  ChainQuotient cq = chain_quotient(p, 2);
  SimplicialMap dbl = compose(two_sphere_fold(cq.wedge_target, cq.sphere_target), cq.delta);
  Gmc G = compose(gmc_from_map(dbl, "fold-pinch"), opposite(gmc_from_map(cq.q, "unit")));
  G.class_tag = "deg(2)";
  if (gmc_degree(G, p) != 2) throw IntegrityError("degree_two_gmc: degree oracle mismatch");
  cache.emplace(p, G);
  return G;
}

Gmc degree_minus_one_gmc(int p) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  static std::map<int, Gmc> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  SubsetExtract B = subset_extract(delta(p + 1), boundary_delta_witness(p + 1));
  std::vector<std::uint32_t> v0, v1;
  for (std::uint32_t v = 1; v <= static_cast<std::uint32_t>(p) + 1; ++v) v0.push_back(v);
  v1.push_back(0);
  for (std::uint32_t v = 2; v <= static_cast<std::uint32_t>(p) + 1; ++v) v1.push_back(v);
  std::uint32_t f0 = complex_find(*B.space, v0);
  std::uint32_t f1 = complex_find(*B.space, v1);

  Gmc G = compose(gmc_from_map(top_cell_collapse(B.space, f1, p), "facet1"),
                  opposite(gmc_from_map(top_cell_collapse(B.space, f0, p), "facet0")));
  G.class_tag = "deg(-1)";
  if (gmc_degree(G, p) != -1) throw IntegrityError("degree_minus_one_gmc: degree oracle mismatch");
  cache.emplace(p, G);
  return G;
}

const WhiteheadAsset& whitehead_asset(int d) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  static std::map<int, WhiteheadAsset> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  ProductResult P = product(delta(d), delta(d));
  std::uint32_t tid = P.left->size() - 1; // top cell of delta(d)
  SubsetWitness W;
  for (std::uint32_t id = 0; id < P.space->size(); ++id)
    if (P.entries[id].a != tid || P.entries[id].b != tid) W.members.push_back(id);
  SubsetExtract B = subset_extract(P.space, W);

  WedgeResult w2 = wedge({sphere(d), sphere(d)});
  WhiteheadAsset A;
  A.domain = B.space;
  A.wedge = w2.space;
  A.attaching.dom = B.space;
  A.attaching.cod = w2.space;
  A.attaching.image.reserve(B.space->size());
  for (std::uint32_t id = 0; id < B.space->size(); ++id) {
    const ProductEntry& e = P.entries[B.to_ambient[id]];
    if (e.a == tid)
      A.attaching.image.push_back(SimplexRef{1, e.u});
    else if (e.b == tid)
      A.attaching.image.push_back(SimplexRef{2, e.v});
    else
      A.attaching.image.push_back(degenerate_vertex(0, B.space->dim(id)));
  }
  check_map(A.attaching, true);

  std::uint32_t top = B.space->size();
  for (std::uint32_t id = 0; id < B.space->size(); ++id)
    if (B.space->dim(id) == 2 * d - 1) {
      top = id;
      break;
    }
  if (top == B.space->size()) throw IntegrityError("whitehead_asset: no top cell");
  A.collapse = top_cell_collapse(B.space, top, 2 * d - 1);

  return cache.emplace(d, std::move(A)).first->second;
}

Gmc whitehead_gmc(int d) {
  const WhiteheadAsset& A = whitehead_asset(d);
  Gmc G = compose(gmc_from_map(A.attaching, "bracket"),
                  opposite(gmc_from_map(A.collapse, "sphere-model")));
  G.class_tag = "whitehead(" + std::to_string(d) + ")";
  return G;
}

Gmc whitehead_square_gmc(int d) {
  const WhiteheadAsset& A = whitehead_asset(d);
  Gmc G = compose(gmc_from_map(two_sphere_fold(A.wedge, sphere(d)), "fold"), whitehead_gmc(d));
  G.class_tag = "whitehead-square(" + std::to_string(d) + ")";
  return G;
}

const HopfAsset& hopf_asset() {
  static HopfAsset A = [] {
    namespace fs = std::filesystem;
    fs::path base = DIOEXT_SOURCE_ASSET_DIR;
    if (const char* env = std::getenv("DIOEXT_ASSET_DIR")) base = env;
    SSetPtr dom;
    SmapFile mf;
    try {
      dom = read_sset_file((base / "v1" / "hopf_domain.sset").string());
      mf = read_smap_file((base / "v1" / "hopf_map.smap").string());
    } catch (const Error& e) {
      throw AssetError(std::string("hopf asset: ") + e.what());
    }
    HopfAsset H;
    H.domain = dom;
    H.target = sphere(2);
    H.map.dom = H.domain;
    H.map.cod = H.target;
    H.map.image = mf.image;
    BigInt h;
    try {
      if (!validate(*H.domain).ok()) throw IntegrityError("domain fails validation");
      check_map(H.map, true);
      h = hopf_invariant(H.map);
    } catch (const Error& e) {
      throw AssetError(std::string("hopf asset: ") + e.what());
    }
    if (h != 1 && h != -1) throw AssetError("hopf asset: cone cup square is " + h.str());
    return H;
  }();
  return A;
}

Gmc hopf_gmc() {
  const HopfAsset& H = hopf_asset();
  std::uint32_t top = H.domain->size();
  for (std::uint32_t id = 0; id < H.domain->size(); ++id)
    if (H.domain->dim(id) == 3) {
      top = id;
      break;
    }
  if (top == H.domain->size()) throw AssetError("hopf asset: no 3-cell in the domain");
  Gmc G = compose(gmc_from_map(H.map, "hopf"),
                  opposite(gmc_from_map(top_cell_collapse(H.domain, top, 3), "sphere-model")));
  G.class_tag = "hopf";
  return G;
}

} // namespace dioext
