#include "dioext/sset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dioext {

std::uint32_t SimplicialSet::add_simplex(int dim, const std::vector<SimplexRef>& faces) {
  if (dim < 0 || dim > kMaxDim) throw DomainError("simplex dimension out of range");
  if (dim == 0) {
    if (!faces.empty()) throw IntegrityError("vertex with face records");
  } else if (faces.size() != static_cast<std::size_t>(dim) + 1) {
    throw IntegrityError("face record count != dim+1");
  }
  for (const SimplexRef& f : faces) {
    if (f.target >= size()) throw IntegrityError("face target does not exist");
    if (ref_dim(f) != dim - 1) throw IntegrityError("face reference dimension != dim-1");
    if (dim >= 2 && f.word >= (1u << (dim - 1)))
      throw IntegrityError("face word out of range for its dimension");
  }
  dims_.push_back(static_cast<std::uint8_t>(dim));
  face_begin_.push_back(static_cast<std::uint32_t>(faces_.size()));
  faces_.insert(faces_.end(), faces.begin(), faces.end());
  return size() - 1;
}

void SimplicialSet::set_basepoint(std::uint32_t id) {
  if (id >= size() || dim(id) != 0) throw IntegrityError("basepoint must be an existing vertex");
  basepoint_ = id;
}

int SimplicialSet::dimension() const {
  int d = -1;
  for (std::uint8_t x : dims_) d = std::max(d, static_cast<int>(x));
  return d;
}

SimplexRef SimplicialSet::face(std::uint32_t id, int i) const {
  int d = dim(id);
  if (i < 0 || i > d || d == 0) throw DomainError("face index out of range");
  return faces_[face_begin_[id] + static_cast<std::uint32_t>(i)];
}

SimplexRef SimplicialSet::apply_face(SimplexRef r, int i) const {
  int d = ref_dim(r);
  if (i < 0 || i > d || d == 0) throw DomainError("face index out of range");
  FaceThrough ft = word_face_through(r.word, i);
  if (!ft.is_face) return SimplexRef{r.target, ft.word};
  SimplexRef fr = face(r.target, ft.face_index);
  return SimplexRef{fr.target, word_compose(ft.word, fr.word)};
}

SimplexRef SimplicialSet::apply_degeneracy(SimplexRef r, int i) const {
  int d = ref_dim(r);
  if (i < 0 || i > d || d + 1 > kMaxDim) throw DomainError("degeneracy index out of range");
  return SimplexRef{r.target, word_insert_degeneracy(r.word, i)};
}

SimplexRef SimplicialSet::apply(SimplexRef r, const std::vector<OpStep>& ops) const {
  for (const OpStep& op : ops) r = op.is_face ? apply_face(r, op.index) : apply_degeneracy(r, op.index);
  return r;
}

SimplexRef SimplicialSet::apply_selection(SimplexRef r, const std::vector<int>& sel) const {
  int n = ref_dim(r);
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (sel[i] < 0 || sel[i] > n) throw DomainError("selection index out of range");
    if (i > 0 && sel[i] < sel[i - 1]) throw DomainError("selection not monotone");
  }
  if (sel.empty()) throw DomainError("empty selection");
  // Total vertex map into the nondegenerate target, then epi-mono: the
  // injective part is an iterated face, the surjective part a word.
  std::vector<int> u = word_surjection(r.word, n);
  std::vector<int> c(sel.size());
  for (std::size_t i = 0; i < sel.size(); ++i) c[i] = u[static_cast<std::size_t>(sel[i])];
  EpiMono em = epi_mono(c);
  SimplexRef cur{r.target, 0};
  int m = dim(r.target);
  std::size_t keep = em.inj.size();
  // Remove missing values top-down so face indices stay equal to values.
  std::size_t next = keep;
  for (int v = m; v >= 0; --v) {
    if (next > 0 && em.inj[next - 1] == v) {
      --next;
      continue;
    }
    cur = apply_face(cur, v);
  }
  DegWord w = word_from_surjection(em.surj);
  return SimplexRef{cur.target, word_compose(w, cur.word)};
}

std::vector<std::uint32_t> SimplicialSet::vertices_of(std::uint32_t id) const {
  int d = dim(id);
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    SimplexRef v = apply_selection(SimplexRef{id, 0}, {j});
    out.push_back(v.target);
  }
  return out;
}

std::vector<std::uint32_t> SimplicialSet::counts_by_dim() const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(std::max(0, dimension() + 1)), 0);
  for (std::uint8_t d : dims_) ++c[d];
  return c;
}

SimplexRef normalize(const SimplicialSet& X, SimplexRef ref, const std::vector<OpStep>& ops) {
  if (ref.target >= X.size()) throw IntegrityError("normalize: dangling target id");
  return X.apply(ref, ops);
}

ValidationReport validate(const SimplicialSet& X, std::size_t identity_budget) {
  ValidationReport rep;
  auto complain = [&rep](const std::string& s) { rep.violations.push_back(s); };

  for (std::uint32_t id = 0; id < X.size(); ++id) {
    int d = X.dim(id);
    for (int i = 0; i <= d && d > 0; ++i) {
      SimplexRef f;
      try {
        f = X.face(id, i);
      } catch (const Error& e) {
        complain("simplex " + std::to_string(id) + " face " + std::to_string(i) + ": " + e.what());
        continue;
      }
      if (f.target >= X.size()) {
        complain("simplex " + std::to_string(id) + " face " + std::to_string(i) + ": dangling target");
        continue;
      }
      if (X.ref_dim(f) != d - 1)
        complain("simplex " + std::to_string(id) + " face " + std::to_string(i) + ": dimension mismatch");
      if (d >= 2 && f.word >= (1u << (d - 1)))
        complain("simplex " + std::to_string(id) + " face " + std::to_string(i) + ": non-canonical word");
    }
  }
  if (!rep.ok()) return rep;

  if (auto bp = X.basepoint()) {
    if (*bp >= X.size() || X.dim(*bp) != 0) complain("basepoint is not a vertex");
  }

  // Exhaustive d_i d_j = d_{j-1} d_i for i < j, within budget.
  if (X.size() <= identity_budget) {
    for (std::uint32_t id = 0; id < X.size(); ++id) {
      int d = X.dim(id);
      if (d < 2) continue;
      SimplexRef r{id, 0};
      for (int j = 1; j <= d; ++j) {
        SimplexRef fj = X.apply_face(r, j);
        for (int i = 0; i < j; ++i) {
          SimplexRef a = X.apply_face(fj, i);
          SimplexRef b = X.apply_face(X.apply_face(r, i), j - 1);
          if (!(a == b)) {
            complain("simplicial identity failed at simplex " + std::to_string(id) + " (i=" +
                     std::to_string(i) + ", j=" + std::to_string(j) + ")");
          }
        }
      }
    }
  }
  return rep;
}

bool is_simplicial_complex(const SimplicialSet& X) {
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    int d = X.dim(id);
    for (int i = 0; i <= d && d > 0; ++i)
      if (X.face(id, i).word != 0) return false;
    std::vector<std::uint32_t> vs = X.vertices_of(id);
    for (std::size_t j = 0; j + 1 < vs.size(); ++j)
      if (vs[j] >= vs[j + 1]) return false;
    if (!seen.insert(std::move(vs)).second) return false;
  }
  return true;
}

bool witness_face_closed(const SimplicialSet& X, const SubsetWitness& A) {
  std::vector<bool> in(X.size(), false);
  for (std::uint32_t m : A.members) {
    if (m >= X.size()) return false;
    in[m] = true;
  }
  for (std::uint32_t m : A.members) {
    int d = X.dim(m);
    for (int i = 0; i <= d && d > 0; ++i)
      if (!in[X.face(m, i).target]) return false;
  }
  return true;
}

SubsetWitness face_closure(const SimplicialSet& X, std::vector<std::uint32_t> seeds) {
  std::vector<bool> in(X.size(), false);
  std::vector<std::uint32_t> stack = std::move(seeds);
  for (std::uint32_t s : stack)
    if (s >= X.size()) throw IntegrityError("face_closure: dangling seed id");
  while (!stack.empty()) {
    std::uint32_t id = stack.back();
    stack.pop_back();
    if (in[id]) continue;
    in[id] = true;
    int d = X.dim(id);
    for (int i = 0; i <= d && d > 0; ++i) {
      std::uint32_t t = X.face(id, i).target;
      if (!in[t]) stack.push_back(t);
    }
  }
  SubsetWitness w;
  for (std::uint32_t id = 0; id < X.size(); ++id)
    if (in[id]) w.members.push_back(id);
  return w;
}

} // namespace dioext
