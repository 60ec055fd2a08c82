#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace subword {

/// Subset of [n] for n <= 31, bit v-1 holding the 1-based index v.
using IndexSet = std::uint32_t;

inline constexpr int kMaxVertices = 31;

constexpr IndexSet full_set(int n) {
  return n <= 0 ? 0u : (IndexSet{1} << n) - 1u;
}

constexpr IndexSet singleton(int v) { return IndexSet{1} << (v - 1); }

constexpr bool set_contains(IndexSet s, int v) { return (s >> (v - 1)) & 1u; }

constexpr IndexSet set_with(IndexSet s, int v) { return s | singleton(v); }

constexpr IndexSet set_without(IndexSet s, int v) { return s & ~singleton(v); }

constexpr int set_size(IndexSet s) { return std::popcount(s); }

constexpr bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }

/// Smallest element; s must be nonempty.
inline int set_min(IndexSet s) { return std::countr_zero(s) + 1; }

/// Largest element; s must be nonempty.
inline int set_max(IndexSet s) { return std::bit_width(s); }

inline std::vector<int> set_elements(IndexSet s) {
  std::vector<int> out;
  for (IndexSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t) + 1);
  return out;
}

inline IndexSet set_of(const std::vector<int>& elems) {
  IndexSet s = 0;
  for (int v : elems) s = set_with(s, v);
  return s;
}

/// Renders "{1,2,4,6}"; the empty set is "{}".
inline std::string set_to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace subword
