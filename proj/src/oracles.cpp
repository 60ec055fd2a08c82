#include "subword/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "subword/errors.hpp"
#include "subword/words.hpp"

namespace subword {

namespace {

inline constexpr int kHomologyLimit = 14;
inline constexpr int kHochsterLimit = 10;
inline constexpr int kExhaustiveContainsLimit = 18;
inline constexpr int kExhaustiveBruhatLimit = 12;

using BigInt = boost::multiprecision::cpp_int;

// Fraction-free (Bareiss) elimination; divisions are exact.  Pivots of
// magnitude one are preferred to keep entries small.
template <typename Int>
int bareiss_rank(std::vector<std::vector<Int>> m, bool* overflow) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      if (pivot < 0) pivot = r;
      if (m[r][col] == 1 || m[r][col] == -1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        if constexpr (std::is_same_v<Int, long long>) {
          long long a, b;
          if (__builtin_mul_overflow(m[rank][col], m[r][c], &a) ||
              __builtin_mul_overflow(m[r][col], m[rank][c], &b) ||
              __builtin_sub_overflow(a, b, &a)) {
            *overflow = true;
            return -1;
          }
          m[r][c] = a / prev;
        } else {
          m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
        }
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Row of a sparse integer matrix: sorted (column, value) pairs.
using SparseRow = std::vector<std::pair<int, long long>>;

// out = a + multiplier * b, merged by column; false on int64 overflow.
bool add_multiple(const SparseRow& a, long long multiplier, const SparseRow& b,
                  SparseRow& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      long long value;
      if (__builtin_mul_overflow(multiplier, b[j].second, &value)) return false;
      if (value != 0) out.emplace_back(b[j].first, value);
      ++j;
    } else {
      long long scaled, value;
      if (__builtin_mul_overflow(multiplier, b[j].second, &scaled) ||
          __builtin_add_overflow(a[i].second, scaled, &value))
        return false;
      if (value != 0) out.emplace_back(a[i].first, value);
      ++i;
      ++j;
    }
  }
  return true;
}

int dense_bigint_rank(const std::vector<SparseRow>& rows, int cols) {
  std::vector<std::vector<BigInt>> dense(rows.size(),
                                         std::vector<BigInt>(static_cast<std::size_t>(cols)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) dense[r][static_cast<std::size_t>(c)] = v;
  bool overflow = false;
  return bareiss_rank(std::move(dense), &overflow);
}

// Exact rank over Q.  Unit pivots (+-1) eliminate with pure integer row
// operations; columns that never offer a unit pivot are deferred, and the
// residual block goes through fraction-free elimination over big integers.
// Boundary matrices almost always reduce entirely with unit pivots, which
// keeps the computation sparse.
int sparse_exact_rank(std::vector<SparseRow> rows, int cols) {
  const std::vector<SparseRow> original = rows;
  std::vector<char> active(rows.size(), 1);
  std::vector<int> deferred;
  int rank = 0;

  auto entry_at = [](const SparseRow& row, int col) -> long long {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    return it != row.end() && it->first == col ? it->second : 0;
  };

  for (int col = 0; col < cols; ++col) {
    int pivot = -1;
    bool column_nonzero = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      long long v = entry_at(rows[r], col);
      if (v == 0) continue;
      column_nonzero = true;
      if (v == 1 || v == -1) {
        if (pivot < 0 || rows[r].size() < rows[static_cast<std::size_t>(pivot)].size())
          pivot = static_cast<int>(r);
      }
    }
    if (pivot < 0) {
      if (column_nonzero) deferred.push_back(col);
      continue;
    }
    const long long pivot_value =
        entry_at(rows[static_cast<std::size_t>(pivot)], col);
    SparseRow merged;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r] || r == static_cast<std::size_t>(pivot)) continue;
      long long v = entry_at(rows[r], col);
      if (v == 0) continue;
      // pivot_value is +-1, so -v / pivot_value = -v * pivot_value
      if (!add_multiple(rows[r], -v * pivot_value,
                        rows[static_cast<std::size_t>(pivot)], merged))
        return dense_bigint_rank(original, cols);
      rows[r].swap(merged);
    }
    active[static_cast<std::size_t>(pivot)] = 0;
    ++rank;
  }

  if (!deferred.empty()) {
    // residual block: remaining rows restricted to the deferred columns
    std::vector<int> position(static_cast<std::size_t>(cols), -1);
    for (std::size_t k = 0; k < deferred.size(); ++k)
      position[static_cast<std::size_t>(deferred[k])] = static_cast<int>(k);
    std::vector<SparseRow> block;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r] || rows[r].empty()) continue;
      SparseRow reduced;
      for (const auto& [c, v] : rows[r])
        if (position[static_cast<std::size_t>(c)] >= 0)
          reduced.emplace_back(position[static_cast<std::size_t>(c)], v);
      if (!reduced.empty()) block.push_back(std::move(reduced));
    }
    rank += dense_bigint_rank(block, static_cast<int>(deferred.size()));
  }
  return rank;
}

}  // namespace

// ---------------------------------------------------------------------------
// homology

long long HomologyProfile::reduced_betti(int dimension) const {
  int idx = dimension + 1;
  if (idx < 0 || idx >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(idx)];
}

bool HomologyProfile::all_zero() const {
  for (long long r : ranks)
    if (r != 0) return false;
  return true;
}

bool HomologyProfile::is_sphere_profile(int dimension) const {
  if (reduced_betti(dimension) != 1) return false;
  for (int d = -1; d <= dim; ++d)
    if (d != dimension && reduced_betti(d) != 0) return false;
  return true;
}

bool HomologyProfile::vanishes_below(int dimension) const {
  for (int d = -1; d < dimension; ++d)
    if (reduced_betti(d) != 0) return false;
  return true;
}

HomologyProfile simplicial_homology(const SimplicialComplex& complex) {
  if (complex.vertex_count() > kHomologyLimit)
    throw TooLarge("homology of a complex on " +
                   std::to_string(complex.vertex_count()) + " vertices");
  HomologyProfile profile;
  profile.dim = complex.dimension();
  if (complex.is_void()) return profile;

  // faces grouped by cardinality; index 0 is the empty face
  std::vector<std::vector<IndexSet>> by_size(static_cast<std::size_t>(profile.dim) + 2);
  for (IndexSet f : complex.faces())
    by_size[static_cast<std::size_t>(set_size(f))].push_back(f);

  // boundary_rank[s] = rank of the map C_s -> C_{s-1}, s = face size
  std::vector<int> boundary_rank(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    if (lower.empty() || upper.empty()) continue;
    std::unordered_map<IndexSet, int> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i)
      row_of[lower[i]] = static_cast<int>(i);
    std::vector<SparseRow> rows(lower.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
      int sign = 1;
      for (int v : set_elements(upper[c])) {
        rows[static_cast<std::size_t>(row_of.at(set_without(upper[c], v)))]
            .emplace_back(static_cast<int>(c), sign);
        sign = -sign;
      }
    }
    boundary_rank[s] = sparse_exact_rank(std::move(rows), static_cast<int>(upper.size()));
  }

  profile.ranks.assign(by_size.size(), 0);
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    long long faces_s = static_cast<long long>(by_size[s].size());
    profile.ranks[s] = faces_s - boundary_rank[s] - boundary_rank[s + 1];
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Hochster's formula

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
  int n = ideal.ambient();
  if (n > kHochsterLimit) throw TooLarge("Stanley-Reisner complex on " +
                                         std::to_string(n) + " vertices");
  if (ideal.is_unit()) throw UnitIdeal();
  std::vector<IndexSet> faces;
  for (IndexSet s = 0; s < (IndexSet{1} << n); ++s)
    if (!ideal.contains_monomial(SquarefreeMonomial(n, s))) faces.push_back(s);
  return SimplicialComplex::from_faces(n, faces);
}

BettiTable hochster_betti(const MonomialIdeal& ideal) {
  int n = ideal.ambient();
  if (n > kHochsterLimit)
    throw TooLarge("Hochster formula on " + std::to_string(n) + " variables");
  BettiTable table;
  if (ideal.is_zero()) return table;
  SimplicialComplex complex = complex_of_ideal(ideal);

  // multigraded Betti numbers live on the lcm lattice of the generators
  std::vector<IndexSet> lattice{0};
  for (const auto& g : ideal.gens()) {
    std::size_t before = lattice.size();
    for (std::size_t i = 0; i < before; ++i) {
      IndexSet joined = lattice[i] | g.support();
      if (std::find(lattice.begin(), lattice.end(), joined) == lattice.end())
        lattice.push_back(joined);
    }
  }
  std::sort(lattice.begin(), lattice.end());

  for (IndexSet sigma : lattice) {
    if (sigma == 0) continue;
    std::vector<IndexSet> restricted;
    for (IndexSet f : complex.facets()) restricted.push_back(f & sigma);
    SimplicialComplex piece = SimplicialComplex::from_faces(n, restricted);
    // a restriction that is a cone has no reduced homology
    IndexSet apex_candidates = piece.facets().empty() ? 0u : full_set(n);
    for (IndexSet f : piece.facets()) apex_candidates &= f;
    if (apex_candidates != 0) continue;
    HomologyProfile profile = simplicial_homology(piece);
    int size = set_size(sigma);
    for (int i = 0; i + 2 <= size + 1; ++i) {
      long long rank = profile.reduced_betti(size - i - 2);
      if (rank != 0) table.add(i, size, rank);
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// exhaustive oracles

bool exhaustive_contains(const CoxeterSystem& sys, const Word& q,
                         const GroupElement& pi) {
  if (q.size() > kExhaustiveContainsLimit)
    throw TooLarge("exhaustive containment on a word of size " +
                   std::to_string(q.size()));
  for (int s : q.letters) sys.check_generator(s);
  const std::uint64_t total = std::uint64_t{1} << q.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    GroupElement g = sys.identity();
    bool reduced = true;
    for (int i = 1; i <= q.size() && reduced; ++i) {
      if (!((mask >> (i - 1)) & 1)) continue;
      GroupElement next = sys.right_multiply(g, q.letter(i));
      if (next.length() < g.length()) reduced = false;
      else g = std::move(next);
    }
    if (reduced && g == pi) return true;
  }
  return false;
}

bool exhaustive_bruhat(const CoxeterSystem& sys, const GroupElement& u,
                       const GroupElement& w) {
  if (w.length() > kExhaustiveBruhatLimit)
    throw TooLarge("exhaustive Bruhat test at length " + std::to_string(w.length()));
  Word rw = lex_first_reduced_word(sys, w);
  return exhaustive_contains(sys, rw, u);
}

}  // namespace subword
