#include "subword/ideals.hpp"

#include <algorithm>

#include "subword/complexes.hpp"
#include "subword/errors.hpp"
#include "subword/words.hpp"

namespace subword {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long value = 1;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

// ---------------------------------------------------------------------------
// monomials

SquarefreeMonomial::SquarefreeMonomial(int n, IndexSet support)
    : n_(n), support_(support) {
  if (n < 0 || n > kMaxVertices) throw TooManyVertices(n, kMaxVertices);
  if (!is_subset(support, full_set(n)))
    throw InputError("monomial support exceeds the ambient variable count");
}

std::string SquarefreeMonomial::to_pretty() const {
  if (is_unit()) return "1";
  std::string out;
  for (int v : set_elements(support_)) out += "x" + std::to_string(v);
  return out;
}

int lex_compare(const SquarefreeMonomial& u, const SquarefreeMonomial& v) {
  if (u.ambient() != v.ambient())
    throw InputError("lex comparison across different ambient rings");
  IndexSet diff = u.support() ^ v.support();
  if (diff == 0) return 0;
  // the monomial owning the smallest differing variable is lex-larger
  return set_contains(u.support(), set_min(diff)) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// ideals

MonomialIdeal::MonomialIdeal(int n, std::vector<SquarefreeMonomial> gens) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw TooManyVertices(n, kMaxVertices);
  for (const auto& g : gens) {
    if (g.ambient() != n)
      throw InputError("generator ambient ring does not match the ideal");
    bool redundant = false;
    for (const auto& kept : gens_)
      if (kept.divides(g)) { redundant = true; break; }
    if (redundant) continue;
    std::erase_if(gens_, [&](const SquarefreeMonomial& kept) { return g.divides(kept); });
    gens_.push_back(g);
  }
}

bool MonomialIdeal::contains_monomial(const SquarefreeMonomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::same_ideal(const MonomialIdeal& other) const {
  if (n_ != other.n_ || gens_.size() != other.gens_.size()) return false;
  auto key = [](const MonomialIdeal& ideal) {
    std::vector<IndexSet> supports;
    supports.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) supports.push_back(g.support());
    std::sort(supports.begin(), supports.end());
    return supports;
  };
  return key(*this) == key(other);
}

std::vector<SquarefreeMonomial> lex_sorted_desc(const MonomialIdeal& ideal) {
  std::vector<SquarefreeMonomial> out = ideal.gens();
  std::sort(out.begin(), out.end(),
            [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
              return lex_compare(a, b) > 0;
            });
  return out;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal,
                                const SquarefreeMonomial& u) {
  if (ideal.ambient() != u.ambient())
    throw InputError("colon across different ambient rings");
  std::vector<SquarefreeMonomial> quotients;
  quotients.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens())
    quotients.emplace_back(ideal.ambient(), g.support() & ~u.support());
  return MonomialIdeal(ideal.ambient(), std::move(quotients));
}

// ---------------------------------------------------------------------------
// linear quotients

int LinearQuotientsCertificate::max_d() const {
  int best = 0;
  for (int v : d) best = std::max(best, v);
  return best;
}

LinearQuotientsResult linear_quotients_certificate(
    const MonomialIdeal& ideal, const std::vector<SquarefreeMonomial>& order) {
  auto sorted_supports = [](const std::vector<SquarefreeMonomial>& ms) {
    std::vector<IndexSet> s;
    s.reserve(ms.size());
    for (const auto& m : ms) s.push_back(m.support());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted_supports(order) != sorted_supports(ideal.gens()))
    throw NotAPermutation();

  LinearQuotientsCertificate cert;
  cert.order = order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    IndexSet variables = 0;
    bool linear = true;
    MonomialIdeal prefix(ideal.ambient(),
                         {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i)});
    MonomialIdeal colon = colon_by_monomial(prefix, order[i]);
    for (const auto& g : colon.gens()) {
      if (g.degree() == 1) variables = set_with(variables, g.min_var());
      else linear = false;
    }
    if (!linear) return {std::nullopt, i + 1};
    cert.sets.push_back(variables);
    cert.d.push_back(set_size(variables));
  }
  return {std::move(cert), 0};
}

LinearQuotientsResult lex_linear_quotients(const MonomialIdeal& ideal) {
  return linear_quotients_certificate(ideal, lex_sorted_desc(ideal));
}

std::vector<IndexSet> set_via_min_formula(const std::vector<IndexSet>& lex_ordered_supports) {
  for (std::size_t i = 1; i < lex_ordered_supports.size(); ++i) {
    IndexSet a = lex_ordered_supports[i - 1], b = lex_ordered_supports[i];
    if (a == b || !set_contains(a, set_min(a ^ b)))
      throw InputError("supports are not strictly lex-decreasing");
  }
  std::vector<IndexSet> sets;
  sets.reserve(lex_ordered_supports.size());
  for (std::size_t i = 0; i < lex_ordered_supports.size(); ++i) {
    IndexSet s = 0;
    for (std::size_t j = 0; j < i; ++j) {
      IndexSet diff = lex_ordered_supports[j] & ~lex_ordered_supports[i];
      s = set_with(s, set_min(diff));  // diff nonempty: gens are incomparable
    }
    sets.push_back(s);
  }
  return sets;
}

// ---------------------------------------------------------------------------
// Betti tables

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  auto key = std::make_pair(i, j);
  long long next = entries_[key] + value;
  if (next == 0) entries_.erase(key);
  else entries_[key] = next;
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
  long long sum = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i) sum += value;
  return sum;
}

int BettiTable::projdim() const {
  int best = -1;
  for (const auto& [key, value] : entries_)
    if (value != 0) best = std::max(best, key.first);
  return best;
}

int BettiTable::regularity() const {
  int best = -1;
  for (const auto& [key, value] : entries_)
    if (value != 0) best = std::max(best, key.second - key.first);
  return best;
}

BettiTable betti_from_certificate(const LinearQuotientsCertificate& cert) {
  BettiTable table;
  if (cert.order.empty()) return table;
  int deg = cert.order.front().degree();
  for (const auto& g : cert.order)
    if (g.degree() != deg) throw MixedDegrees();
  for (int dj : cert.d)
    for (int i = 0; i <= dj; ++i) table.add(i, i + deg, binomial(dj, i));
  return table;
}

// ---------------------------------------------------------------------------
// Hilbert numerators

std::string HilbertNumerator::to_string() const {
  if (coeff.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [degree, value] : coeff) {
    if (value == 0) continue;
    long long mag = value < 0 ? -value : value;
    if (first) {
      if (value < 0) out += "-";
      first = false;
    } else {
      out += value < 0 ? " - " : " + ";
    }
    if (mag != 1 || degree == 0) out += std::to_string(mag);
    if (degree == 1) out += "t";
    else if (degree > 1) out += "t^" + std::to_string(degree);
  }
  return out.empty() ? "0" : out;
}

HilbertNumerator hilbert_numerator_from_certificate(const LinearQuotientsCertificate& cert) {
  BettiTable table = betti_from_certificate(cert);
  HilbertNumerator numerator;
  for (const auto& [key, value] : table.entries()) {
    long long signed_value = key.first % 2 == 0 ? value : -value;
    numerator.coeff[key.second] += signed_value;
    if (numerator.coeff[key.second] == 0) numerator.coeff.erase(key.second);
  }
  return numerator;
}

HilbertNumerator hilbert_numerator_from_census(const std::map<int, long long>& census) {
  HilbertNumerator numerator;
  if (census.empty()) return numerator;
  int base = census.begin()->first;  // = length(pi): the smallest size present
  for (const auto& [size, count] : census) {
    if (count == 0) continue;
    numerator.coeff[size] = (size - base) % 2 == 0 ? count : -count;
  }
  return numerator;
}

HilbertNumerator hilbert_numerator_fine(const CoxeterSystem& sys, const Word& q,
                                        const GroupElement& pi, int census_limit) {
  HilbertNumerator numerator;
  numerator.fine.emplace();
  int base = pi.length();
  for_each_demazure_subword(sys, q, pi, census_limit,
                            [&](std::uint64_t mask, int size) {
    int sign = (size - base) % 2 == 0 ? 1 : -1;
    (*numerator.fine)[mask] = sign;
    numerator.coeff[size] += sign;
    if (numerator.coeff[size] == 0) numerator.coeff.erase(size);
  });
  return numerator;
}

// ---------------------------------------------------------------------------
// bounds and invariants

bool projdim_bound_check(const LinearQuotientsCertificate& cert, int n, int lpi) {
  if (cert.max_d() > n - lpi) return false;
  for (std::size_t i = 0; i < cert.d.size(); ++i)
    if (cert.d[i] == static_cast<int>(i) && static_cast<int>(i) + 1 > n - lpi + 1)
      return false;
  return true;
}

RegularityResult regularity_of_SR_ideal(const CoxeterSystem& sys, const Word& q,
                                        const GroupElement& pi) {
  SimplicialComplex complex = subword_complex(sys, q, pi);
  LinearQuotientsResult result = lex_linear_quotients(alexander_dual_ideal(complex));
  if (!result.success())
    throw PropertyViolation("dual ideal of a subword complex rejected the lex "
                            "linear-quotient order at generator " +
                            std::to_string(result.failure_index));
  RegularityResult out;
  out.reg = result.certificate->max_d() + 1;
  out.bound = q.size() - pi.length() + 1;
  out.within_bound = out.reg <= out.bound;
  return out;
}

// ---------------------------------------------------------------------------
// height

namespace {

void cover_search(const std::vector<IndexSet>& supports, std::size_t index,
                  IndexSet chosen, int used, int& best) {
  if (used >= best) return;
  while (index < supports.size() && (supports[index] & chosen) != 0) ++index;
  if (index == supports.size()) {
    best = used;
    return;
  }
  for (int v : set_elements(supports[index]))
    cover_search(supports, index + 1, set_with(chosen, v), used + 1, best);
}

}  // namespace

int height(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdeal();
  if (ideal.is_unit()) throw UnitIdeal();
  std::vector<IndexSet> supports;
  supports.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) supports.push_back(g.support());
  int best = ideal.ambient() + 1;
  cover_search(supports, 0, 0, 0, best);
  return best;
}

}  // namespace subword
