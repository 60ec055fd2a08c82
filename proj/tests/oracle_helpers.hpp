#pragma once

// Test-only brute-force oracles, kept independent of the library's own
// algorithmic routes.

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "subword/complexes.hpp"
#include "subword/coxeter.hpp"
#include "subword/oracles.hpp"

namespace testoracle {

using namespace subword;

// Word-metric lengths by breadth-first search over the Cayley graph.
inline std::unordered_map<GroupElement, int, GroupElementHash> bfs_lengths(
    const CoxeterSystem& sys) {
  std::unordered_map<GroupElement, int, GroupElementHash> dist;
  std::queue<GroupElement> queue;
  dist.emplace(sys.identity(), 0);
  queue.push(sys.identity());
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop();
    for (int s = 1; s <= sys.rank(); ++s) {
      GroupElement h = sys.right_multiply(g, s);
      if (dist.emplace(h, dist.at(g) + 1).second) queue.push(h);
    }
  }
  return dist;
}

// Shiftedness by literal enumeration of every vertex labelling.
inline bool shifted_by_all_labellings(const SimplicialComplex& complex) {
  int n = complex.vertex_count();
  std::vector<IndexSet> face_list = complex.faces();
  std::unordered_set<IndexSet> faces(face_list.begin(), face_list.end());
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i + 1;
  do {
    bool good = true;
    for (IndexSet f : face_list) {
      for (int v : set_elements(f)) {
        for (int u = 1; u <= n && good; ++u) {
          if (set_contains(f, u)) continue;
          if (label[static_cast<std::size_t>(u - 1)] >=
              label[static_cast<std::size_t>(v - 1)])
            continue;
          if (!faces.count(set_with(set_without(f, v), u))) good = false;
        }
        if (!good) break;
      }
      if (!good) break;
    }
    if (good) return true;
  } while (std::next_permutation(label.begin(), label.end()));
  return complex.is_void() || n == 0;
}

// Link of a face: { G : G disjoint from F, G union F a face }.
inline SimplicialComplex face_link(const SimplicialComplex& complex, IndexSet f) {
  std::vector<IndexSet> pieces;
  for (IndexSet facet : complex.facets())
    if (is_subset(f, facet)) pieces.push_back(facet & ~f);
  return SimplicialComplex::from_faces(complex.vertex_count(), pieces);
}

// Reisner criterion over Q: every face link has vanishing reduced homology
// below its dimension.
inline bool reisner_cohen_macaulay(const SimplicialComplex& complex) {
  for (IndexSet f : complex.faces()) {
    SimplicialComplex lk = face_link(complex, f);
    HomologyProfile profile = simplicial_homology(lk);
    if (!profile.vanishes_below(lk.dimension())) return false;
  }
  return true;
}

// Reduced Euler characteristic straight from a face census.
inline long long reduced_euler(const SimplicialComplex& complex) {
  long long chi = 0;
  for (IndexSet f : complex.faces()) chi += set_size(f) % 2 == 0 ? -1 : 1;
  return chi;
}

}  // namespace testoracle
