#include "dioext/word.hpp"

#include <cassert>
#include <stdexcept>

namespace dioext {

DegWord word_insert_degeneracy(DegWord w, int i) {
  assert(i >= 0 && i < kMaxDim);
  std::uint32_t lo = low_bits(i);
  return (w & lo) | (1u << i) | ((w & ~lo) << 1);
}

DegWord word_delete_bit(DegWord w, int i) {
  assert(w & (1u << i));
  std::uint32_t lo = low_bits(i);
  return (w & lo) | ((w >> 1) & ~lo);
}

DegWord word_compose(DegWord outer, DegWord inner) {
  DegWord acc = inner;
  for (int i = 0; i < 32; ++i)
    if (outer & (1u << i)) acc = word_insert_degeneracy(acc, i);
  return acc;
}

std::vector<int> word_surjection(DegWord w, int n) {
  std::vector<int> u(static_cast<std::size_t>(n) + 1);
  int v = 0;
  for (int i = 0; i <= n; ++i) {
    u[static_cast<std::size_t>(i)] = v;
    if (!(w & (1u << i))) ++v; // no repeat at i: next value advances
  }
  return u;
}

DegWord word_from_surjection(const std::vector<int>& u) {
  DegWord w = 0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i] == u[i + 1])
      w |= (1u << i);
    else if (u[i] + 1 != u[i + 1])
      throw std::invalid_argument("word_from_surjection: not a monotone surjection");
  }
  if (!u.empty() && u.front() != 0)
    throw std::invalid_argument("word_from_surjection: does not start at 0");
  return w;
}

FaceThrough word_face_through(DegWord w, int i) {
  FaceThrough out;
  std::uint32_t lo = low_bits(i);
  if (w & (1u << i)) {
    // d_i s_i = id: drop the repeat at i, reindex higher bits down.
    out.is_face = false;
    out.word = (w & lo) | ((w >> 1) & ~lo);
    return out;
  }
  if (i > 0 && (w & (1u << (i - 1)))) {
    // d_{i+1} s_i = id seen from the repeat at i-1.
    std::uint32_t lo1 = low_bits(i - 1);
    out.is_face = false;
    out.word = (w & lo1) | ((w >> 1) & ~lo1);
    return out;
  }
  // The face survives: it hits value u(i) of the base simplex.
  out.is_face = true;
  out.face_index = i - word_length(w & lo);
  out.word = (w & lo) | ((w >> 1) & ~lo);
  return out;
}

EpiMono epi_mono(const std::vector<int>& u) {
  EpiMono out;
  out.surj.reserve(u.size());
  int prev = -1;
  int next = -1;
  for (int v : u) {
    assert(v >= prev);
    if (v != prev) {
      ++next;
      out.inj.push_back(v);
      prev = v;
    }
    out.surj.push_back(next);
  }
  return out;
}

std::vector<int> map_compose(const std::vector<int>& after, const std::vector<int>& before) {
  std::vector<int> out(before.size());
  for (std::size_t i = 0; i < before.size(); ++i)
    out[i] = after.at(static_cast<std::size_t>(before[i]));
  return out;
}

bool is_identity_map(const std::vector<int>& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != static_cast<int>(i)) return false;
  return true;
}

} // namespace dioext
