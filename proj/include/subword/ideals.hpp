#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subword/coxeter.hpp"
#include "subword/smallset.hpp"
#include "subword/word.hpp"
#include "subword/words.hpp"

namespace subword {

/// Squarefree monomial x_F in k[x_1..x_n], stored as its support set.
class SquarefreeMonomial {
public:
  SquarefreeMonomial() = default;
  SquarefreeMonomial(int n, IndexSet support);

  int ambient() const { return n_; }
  IndexSet support() const { return support_; }
  int degree() const { return set_size(support_); }
  bool is_unit() const { return support_ == 0; }
  int min_var() const { return set_min(support_); }
  int max_var() const { return set_max(support_); }
  bool divides(const SquarefreeMonomial& other) const {
    return is_subset(support_, other.support_);
  }

  std::string to_string() const { return set_to_string(support_); }
  std::string to_pretty() const;  // "x1x2x4x6"; "1" for the unit

  friend bool operator==(const SquarefreeMonomial&, const SquarefreeMonomial&) = default;

private:
  int n_ = 0;
  IndexSet support_ = 0;
};

/// +1 if u >_lex v, 0 if equal, -1 otherwise (variable order x_1 > ... > x_n:
/// the smaller differing index wins).
int lex_compare(const SquarefreeMonomial& u, const SquarefreeMonomial& v);

/// Squarefree monomial ideal given by its unique minimal generators.  The
/// constructor discards duplicates and non-minimal generators, keeping the
/// first occurrence order of the survivors.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(int n, std::vector<SquarefreeMonomial> gens);
  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  int ambient() const { return n_; }
  const std::vector<SquarefreeMonomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool contains_monomial(const SquarefreeMonomial& m) const;

  /// Equality as ideals: same ambient ring and same minimal generator set.
  bool same_ideal(const MonomialIdeal& other) const;

private:
  int n_ = 0;
  std::vector<SquarefreeMonomial> gens_;
};

/// Generators in lexicographically decreasing order.
std::vector<SquarefreeMonomial> lex_sorted_desc(const MonomialIdeal& ideal);

/// Minimal generators of I : u = ({ w / gcd(w,u) : w in G(I) }).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal,
                                const SquarefreeMonomial& u);

/// Witness that (u_1..u_{i-1}) : u_i is generated by variables for every i.
struct LinearQuotientsCertificate {
  std::vector<SquarefreeMonomial> order;
  std::vector<IndexSet> sets;  // sets[i] for order[i]; sets[0] == 0
  std::vector<int> d;          // d[i] == |sets[i]|

  int max_d() const;
};

struct LinearQuotientsResult {
  std::optional<LinearQuotientsCertificate> certificate;
  /// 1-based index of the first generator whose colon ideal has a generator
  /// of degree >= 2; meaningful when !certificate.
  std::size_t failure_index = 0;

  bool success() const { return certificate.has_value(); }
};

LinearQuotientsResult linear_quotients_certificate(
    const MonomialIdeal& ideal, const std::vector<SquarefreeMonomial>& order);

/// Certificate attempt in lexicographically decreasing generator order.
LinearQuotientsResult lex_linear_quotients(const MonomialIdeal& ideal);

/// sets[i] = { min(P_j \ P_i) : j < i } computed from support sets alone.
/// Valid for the lex-ordered representing subwords of a subword complex; the
/// caller asserts that provenance (the rule fails for general ideals).
std::vector<IndexSet> set_via_min_formula(const std::vector<IndexSet>& lex_ordered_supports);

/// Graded Betti numbers beta_{i,j}, finitely supported.
class BettiTable {
public:
  void add(int i, int j, long long value);
  long long at(int i, int j) const;
  long long total(int i) const;  // beta_i = sum_j beta_{i,j}
  /// Largest homological degree with a nonzero entry; -1 for the empty table.
  int projdim() const;
  /// max { j - i : beta_{i,j} != 0 }; -1 for the empty table.
  int regularity() const;
  bool empty() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// beta_{i,i+deg} = sum_j C(d_j, i) for an equigenerated certificate.
BettiTable betti_from_certificate(const LinearQuotientsCertificate& cert);

/// Numerator of the Hilbert series over the free-module denominator, in the
/// Z-grading, with the fine (subset) grading optionally attached.
struct HilbertNumerator {
  std::map<int, long long> coeff;                       // degree -> coefficient
  std::optional<std::map<std::uint64_t, int>> fine;     // position set -> +-1

  std::string to_string() const;  // "4t^4 - 4t^5 + t^6"
  bool same_coefficients(const HilbertNumerator& other) const {
    return coeff == other.coeff;
  }
};

/// Resolution route: K(t) = sum_i (-1)^i beta_i t^{i+deg}.
HilbertNumerator hilbert_numerator_from_certificate(const LinearQuotientsCertificate& cert);

/// Census route: K(t) = sum_P (-1)^{|P|-l} t^{|P|} over subwords with Demazure
/// product pi; the census argument is keyed by |P|.
HilbertNumerator hilbert_numerator_from_census(const std::map<int, long long>& census);

/// Census route with the fine grading retained.
HilbertNumerator hilbert_numerator_fine(const CoxeterSystem& sys, const Word& q,
                                        const GroupElement& pi,
                                        int census_limit = kDefaultCensusLimit);

/// max d_i <= n - lpi, plus the propagation bound: d_i = i-1 forces
/// i <= n - lpi + 1.
bool projdim_bound_check(const LinearQuotientsCertificate& cert, int n, int lpi);

struct RegularityResult {
  int reg = 0;
  int bound = 0;
  bool within_bound = false;
};

/// reg(I_Delta) = projdim(I_dual) + 1 read off the lex certificate of the
/// dual ideal of the subword complex of (q, pi).
RegularityResult regularity_of_SR_ideal(const CoxeterSystem& sys, const Word& q,
                                        const GroupElement& pi);

/// Minimum vertex cover of the generator supports (= height for squarefree
/// monomial ideals).  Exhaustive branch and bound.
int height(const MonomialIdeal& ideal);

long long binomial(int n, int k);

}  // namespace subword
