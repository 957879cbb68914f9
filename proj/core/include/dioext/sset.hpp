#pragma once

#include "dioext/errors.hpp"
#include "dioext/word.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dioext {

// Reference to a possibly degenerate simplex: the unique nondegenerate target
// together with a canonical degeneracy word.  Its dimension is
// dim(target) + |word|.
struct SimplexRef {
  std::uint32_t target = 0;
  DegWord word = 0;

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

// One face or degeneracy step, for normalize().
struct OpStep {
  bool is_face = true;
  int index = 0;
};

// A finite simplicial set encoded by its nondegenerate simplices.  Each
// simplex of dimension n stores n+1 face references; everything else is
// derived by the canonical-form word algebra.
class SimplicialSet {
public:
  std::uint32_t add_simplex(int dim, const std::vector<SimplexRef>& faces);
  void set_basepoint(std::uint32_t id);

  std::uint32_t size() const { return static_cast<std::uint32_t>(dims_.size()); }
  int dim(std::uint32_t id) const { return dims_.at(id); }
  int dimension() const; // max simplex dimension, -1 if empty
  std::optional<std::uint32_t> basepoint() const { return basepoint_; }

  SimplexRef face(std::uint32_t id, int i) const;
  int ref_dim(SimplexRef r) const { return dim(r.target) + word_length(r.word); }

  // Canonical-form operator application.
  SimplexRef apply_face(SimplexRef r, int i) const;
  SimplexRef apply_degeneracy(SimplexRef r, int i) const;
  SimplexRef apply(SimplexRef r, const std::vector<OpStep>& ops) const;

  // Pullback along the monotone vertex selection (sel_0 <= ... <= sel_k);
  // entries index vertices of r.
  SimplexRef apply_selection(SimplexRef r, const std::vector<int>& sel) const;

  // Vertex ids of a nondegenerate simplex, in face order.
  std::vector<std::uint32_t> vertices_of(std::uint32_t id) const;

  std::vector<std::uint32_t> counts_by_dim() const;

  friend bool operator==(const SimplicialSet&, const SimplicialSet&) = default;

private:
  std::vector<std::uint8_t> dims_;
  std::vector<std::uint32_t> face_begin_;
  std::vector<SimplexRef> faces_;
  std::optional<std::uint32_t> basepoint_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr freeze(SimplicialSet&& s) {
  return std::make_shared<const SimplicialSet>(std::move(s));
}

// Equivalent of normalize() as a free function: apply an operator sequence
// and return the canonical (target, word) form.
SimplexRef normalize(const SimplicialSet& X, SimplexRef ref, const std::vector<OpStep>& ops);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural validation plus the exhaustive simplicial-identity check
// (identity check skipped above the budget; structure always checked).
ValidationReport validate(const SimplicialSet& X, std::size_t identity_budget = 100000);

// True iff every simplex has nondegenerate faces, strictly increasing
// distinct vertices, and is uniquely determined by its vertex set.
bool is_simplicial_complex(const SimplicialSet& X);

// A simplicial subset given by the ids of its nondegenerate members.
struct SubsetWitness {
  std::vector<std::uint32_t> members; // sorted ascending, unique
};

bool witness_face_closed(const SimplicialSet& X, const SubsetWitness& A);
SubsetWitness face_closure(const SimplicialSet& X, std::vector<std::uint32_t> seeds);

} // namespace dioext
