#include "subword/complexes.hpp"

#include <algorithm>
#include <unordered_set>

#include "subword/errors.hpp"
#include "subword/words.hpp"

namespace subword {

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex(int n, std::vector<IndexSet> facets) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw TooManyVertices(n, kMaxVertices);
  for (IndexSet f : facets) {
    if (!is_subset(f, full_set(n)))
      throw InputError("facet exceeds the vertex set");
    if (std::find(facets_.begin(), facets_.end(), f) == facets_.end())
      facets_.push_back(f);
  }
  for (IndexSet f : facets_)
    for (IndexSet g : facets_)
      if (f != g && is_subset(f, g))
        throw InputError("facet list is not an antichain");
}

SimplicialComplex SimplicialComplex::from_faces(int n, const std::vector<IndexSet>& faces) {
  std::vector<IndexSet> maximal;
  for (IndexSet f : faces) {
    bool dominated = false;
    for (IndexSet g : faces)
      if (f != g && is_subset(f, g)) { dominated = true; break; }
    if (!dominated && std::find(maximal.begin(), maximal.end(), f) == maximal.end())
      maximal.push_back(f);
  }
  return SimplicialComplex(n, std::move(maximal));
}

bool SimplicialComplex::is_face(IndexSet s) const {
  for (IndexSet f : facets_)
    if (is_subset(s, f)) return true;
  return false;
}

bool SimplicialComplex::is_pure() const {
  for (IndexSet f : facets_)
    if (set_size(f) != set_size(facets_.front())) return false;
  return true;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int best = -1;
  for (IndexSet f : facets_) best = std::max(best, set_size(f) - 1);
  return best;
}

std::vector<IndexSet> SimplicialComplex::faces() const {
  std::unordered_set<IndexSet> seen;
  for (IndexSet f : facets_) {
    IndexSet s = f;
    while (true) {  // all submasks of f, the empty set included
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::vector<IndexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](IndexSet a, IndexSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return a < b;
  });
  return out;
}

bool SimplicialComplex::same_complex(const SimplicialComplex& other) const {
  if (n_ != other.n_) return false;
  std::vector<IndexSet> a = facets_, b = other.facets_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------
// subword complexes and Alexander duality

SimplicialComplex subword_complex(const CoxeterSystem& sys, const Word& q,
                                  const GroupElement& pi) {
  if (pi.is_identity()) throw DegeneratePi();
  if (q.size() > kMaxVertices) throw TooManyVertices(q.size(), kMaxVertices);
  std::vector<Subword> reps = representations(sys, q, pi);
  if (reps.empty()) throw NotContained();
  std::vector<IndexSet> facets;
  facets.reserve(reps.size());
  for (const Subword& p : reps) facets.push_back(full_set(q.size()) & ~set_of(p));
  return SimplicialComplex(q.size(), std::move(facets));
}

MonomialIdeal alexander_dual_ideal(const SimplicialComplex& complex) {
  if (complex.is_void())
    throw InputError("Alexander dual needs at least one facet");
  std::vector<SquarefreeMonomial> gens;
  gens.reserve(complex.facets().size());
  for (IndexSet f : complex.facets())
    gens.emplace_back(complex.vertex_count(), full_set(complex.vertex_count()) & ~f);
  return MonomialIdeal(complex.vertex_count(), std::move(gens));
}

namespace {

void check_vertex(const SimplicialComplex& complex, int v) {
  if (v < 1 || v > complex.vertex_count()) throw IndexOutOfRange(v);
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& complex, int v) {
  check_vertex(complex, v);
  std::vector<IndexSet> pieces;
  for (IndexSet f : complex.facets())
    if (set_contains(f, v)) pieces.push_back(set_without(f, v));
  return SimplicialComplex::from_faces(complex.vertex_count(), pieces);
}

SimplicialComplex deletion(const SimplicialComplex& complex, int v) {
  check_vertex(complex, v);
  std::vector<IndexSet> pieces;
  for (IndexSet f : complex.facets()) pieces.push_back(set_without(f, v));
  return SimplicialComplex::from_faces(complex.vertex_count(), pieces);
}

// ---------------------------------------------------------------------------
// shelling via vertex decomposition

namespace {

std::vector<IndexSet> shift_up(const std::vector<IndexSet>& facets, bool attach_first) {
  std::vector<IndexSet> out;
  out.reserve(facets.size());
  for (IndexSet f : facets) out.push_back((f << 1) | (attach_first ? 1u : 0u));
  return out;
}

Word drop_first(const Word& q) {
  return Word(std::vector<int>(q.letters.begin() + 1, q.letters.end()));
}

void check_piece(const SimplicialComplex& direct, int n,
                 const std::vector<IndexSet>& recursed_shifted,
                 const char* which) {
  if (!direct.same_complex(SimplicialComplex::from_faces(n, recursed_shifted)))
    throw PropertyViolation(std::string("vertex decomposition: the ") + which +
                            " piece disagrees with the subword complex of the "
                            "shortened word");
}

// Facets in shelling order, over the positions of q.  pi == identity is
// allowed internally: the complex is then the full simplex on [n].
std::vector<IndexSet> vds_rec(const CoxeterSystem& sys, const Word& q,
                              const GroupElement& pi) {
  int n = q.size();
  if (pi.is_identity()) return {full_set(n)};
  std::vector<Subword> reps = representations(sys, q, pi);
  if (reps.size() == 1) return {full_set(n) & ~set_of(reps.front())};

  std::vector<IndexSet> facets;
  for (const Subword& p : reps) facets.push_back(full_set(n) & ~set_of(p));
  SimplicialComplex complex(n, facets);
  SimplicialComplex link_direct = link(complex, 1);
  SimplicialComplex del_direct = deletion(complex, 1);

  int sigma = q.letter(1);
  Word rest = drop_first(q);
  GroupElement sigma_pi = sys.left_multiply(sigma, pi);

  if (sigma_pi.length() > pi.length()) {
    // no representation can start with sigma: the complex is a cone over
    // vertex 1 and link = deletion
    std::vector<IndexSet> sub = vds_rec(sys, rest, pi);
    check_piece(link_direct, n, shift_up(sub, false), "link");
    check_piece(del_direct, n, shift_up(sub, false), "deletion");
    return shift_up(sub, true);
  }

  // deletion part: representations of sigma*pi avoiding position 1
  std::vector<IndexSet> del_part = vds_rec(sys, rest, sigma_pi);
  check_piece(del_direct, n, shift_up(del_part, false), "deletion");

  // link part: representations of pi avoiding position 1 (possibly none)
  std::vector<IndexSet> link_part;
  if (contains(sys, rest, pi)) link_part = vds_rec(sys, rest, pi);
  check_piece(link_direct, n, shift_up(link_part, false), "link");

  std::vector<IndexSet> order = shift_up(del_part, false);
  for (IndexSet f : shift_up(link_part, true)) order.push_back(f);
  return order;
}

}  // namespace

ShellingOrder vertex_decompose_shelling(const CoxeterSystem& sys, const Word& q,
                                        const GroupElement& pi) {
  if (pi.is_identity()) throw DegeneratePi();
  if (q.size() > kMaxVertices) throw TooManyVertices(q.size(), kMaxVertices);
  if (!contains(sys, q, pi)) throw NotContained();
  return vds_rec(sys, q, pi);
}

bool is_shelling(const SimplicialComplex& complex, const ShellingOrder& order) {
  std::vector<IndexSet> a = complex.facets(), b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw NotAPermutation();
  if (!complex.is_pure()) throw NotPure();
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      bool witnessed = false;
      for (std::size_t k = 0; k < j && !witnessed; ++k) {
        IndexSet diff_k = order[j] & ~order[k];
        witnessed = set_size(diff_k) == 1 && is_subset(diff_k, order[j] & ~order[i]);
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// shiftedness

namespace {

inline constexpr int kShiftedLimit = 9;

}  // namespace

bool is_shifted(const SimplicialComplex& complex) {
  int n = complex.vertex_count();
  if (n > kShiftedLimit) throw TooManyVertices(n, kShiftedLimit);
  if (complex.is_void() || n == 0) return true;

  std::vector<IndexSet> face_list = complex.faces();
  std::unordered_set<IndexSet> faces(face_list.begin(), face_list.end());

  // may_precede[u][v]: giving u a smaller label than v keeps every exchange
  // F - v + u inside the complex
  std::vector<std::vector<bool>> may_precede(
      static_cast<std::size_t>(n) + 1,
      std::vector<bool>(static_cast<std::size_t>(n) + 1, true));
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      for (IndexSet f : face_list) {
        if (!set_contains(f, v) || set_contains(f, u)) continue;
        if (!faces.count(set_with(set_without(f, v), u))) {
          may_precede[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = false;
          break;
        }
      }
    }

  // Exhaustive search over labellings as a DP over the set already labelled:
  // appending v as the next-larger label needs may_precede[u][v] for all
  // placed u.
  std::vector<bool> reachable(std::size_t{1} << n, false);
  reachable[0] = true;
  for (IndexSet placed = 0; placed < (IndexSet{1} << n); ++placed) {
    if (!reachable[placed]) continue;
    for (int v = 1; v <= n; ++v) {
      if (set_contains(placed, v)) continue;
      bool ok = true;
      for (int u : set_elements(placed))
        if (!may_precede[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
      if (ok) reachable[set_with(placed, v)] = true;
    }
  }
  return reachable[full_set(n)];
}

// ---------------------------------------------------------------------------
// Stanley-Reisner ideal and f-vector

MonomialIdeal minimal_nonfaces(const SimplicialComplex& complex) {
  int n = complex.vertex_count();
  std::vector<SquarefreeMonomial> gens;
  for (IndexSet s = 0; s < (IndexSet{1} << n); ++s) {
    if (complex.is_face(s)) continue;
    bool minimal = true;
    for (int v : set_elements(s))
      if (!complex.is_face(set_without(s, v))) { minimal = false; break; }
    if (minimal) gens.emplace_back(n, s);
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<long long> f_vector(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  std::vector<long long> counts(static_cast<std::size_t>(complex.dimension()) + 2, 0);
  for (IndexSet f : complex.faces()) ++counts[static_cast<std::size_t>(set_size(f))];
  return counts;
}

}  // namespace subword
