#pragma once

#include <cstdint>
#include <vector>

namespace dioext {

// A degeneracy word in canonical form, stored as a bitmask.
//
// Every iterated degeneracy operator has a unique canonical form: the induced
// monotone surjection u : [n] -> [m] determines, and is determined by, the
// set of positions i with u(i) = u(i+1).  We store that set as a bitmask.
// Dimensions are capped at 31 so a word always fits in a uint32.
//
// Reading a mask {i_1 < i_2 < ... < i_k} as an operator means applying
// elementary degeneracies s_{i_1} first, i.e. the operator is
// s_{i_k} ... s_{i_2} s_{i_1} in composition order.
using DegWord = std::uint32_t;

constexpr int kMaxDim = 31;

inline int word_length(DegWord w) { return __builtin_popcount(w); }

inline std::uint32_t low_bits(int i) { return (i >= 32) ? 0xffffffffu : ((1u << i) - 1u); }

// Canonical form of s_i applied after an existing word.
DegWord word_insert_degeneracy(DegWord w, int i);

// Remove the repeat at position i (bit i must be set); higher bits shift down.
DegWord word_delete_bit(DegWord w, int i);

// Canonical form of the composite s_{outer} s_{inner}.
DegWord word_compose(DegWord outer, DegWord inner);

// The monotone surjection [n] -> [n - popcount(w)] encoded by w, where n is
// the dimension of the degenerate simplex.  Output has n + 1 entries.
std::vector<int> word_surjection(DegWord w, int n);

// Inverse of word_surjection: the word whose surjection repeats exactly where
// u does.  u must be a monotone surjection onto an initial segment.
DegWord word_from_surjection(const std::vector<int>& u);

// Result of pushing a face operator through a degeneracy word.
struct FaceThrough {
  bool is_face = false; // false: the face cancelled into a pure degeneracy
  int face_index = 0;   // valid when is_face; face to apply to the target
  DegWord word = 0;     // remaining degeneracy word (outer part)
};

// Canonical form of d_i s_w as either s_{w'} or s_{w'} d_v.
// n is the dimension of the degenerate simplex s_w acts into.
FaceThrough word_face_through(DegWord w, int i);

// Epi-mono factorisation of an arbitrary monotone map given by its values:
// u = inject . surject with inject strictly monotone and surject a monotone
// surjection onto an initial segment.
struct EpiMono {
  std::vector<int> surj; // [k] -> [r]
  std::vector<int> inj;  // [r] -> [m], strictly increasing
};
EpiMono epi_mono(const std::vector<int>& u);

// Compose monotone maps by value lookup: (after . before)(i) = after[before[i]].
std::vector<int> map_compose(const std::vector<int>& after, const std::vector<int>& before);

bool is_identity_map(const std::vector<int>& u);

} // namespace dioext
