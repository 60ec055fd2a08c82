#include "subword/special.hpp"

#include <algorithm>

#include "subword/errors.hpp"
#include "subword/oracles.hpp"
#include "subword/words.hpp"

namespace subword {

SpecialClassReport detect_and_factor(const LinearQuotientsCertificate& cert,
                                     const std::vector<IndexSet>& rep_supports,
                                     int n, int pi_length) {
  SpecialClassReport report;
  report.r = static_cast<int>(cert.order.size());
  report.n = n;
  report.pi_length = pi_length;
  if (report.r == 0) throw ZeroIdeal();
  if (rep_supports.size() != cert.order.size())
    throw InputError("certificate and representation list disagree in size");
  for (std::size_t i = 0; i < rep_supports.size(); ++i)
    if (rep_supports[i] != cert.order[i].support())
      throw InputError("certificate order does not match the representation list");

  report.is_special =
      report.r <= n - pi_length + 1 && cert.d.back() == report.r - 1;
  if (!report.is_special) return report;

  IndexSet last = rep_supports.back();
  int pivot;
  if (report.r == 1) {
    // any support element works here; take the largest for determinism
    pivot = set_max(last);
  } else {
    pivot = 0;
    for (std::size_t j = 0; j + 1 < rep_supports.size(); ++j) {
      IndexSet removed = last & ~rep_supports[j];
      IndexSet added = rep_supports[j] & ~last;
      if (set_size(removed) != 1 || set_size(added) != 1)
        throw FactorizationMismatch(
            "generator " + std::to_string(j + 1) +
            " is not a single-variable exchange of the last generator");
      int l = set_min(removed);
      if (pivot == 0) pivot = l;
      else if (pivot != l)
        throw FactorizationMismatch("no single pivot works for every generator");
    }
  }
  report.pivot = pivot;
  report.common_factor = SquarefreeMonomial(n, set_without(last, pivot));

  for (std::size_t j = 0; j + 1 < rep_supports.size(); ++j)
    report.linear_vars.push_back(set_min(rep_supports[j] & ~last));
  report.linear_vars.push_back(pivot);

  // the factorization must reproduce the generator set exactly
  std::vector<IndexSet> regenerated;
  for (int v : report.linear_vars)
    regenerated.push_back(set_with(report.common_factor->support(), v));
  std::vector<IndexSet> expected = rep_supports;
  std::sort(regenerated.begin(), regenerated.end());
  std::sort(expected.begin(), expected.end());
  if (regenerated != expected)
    throw FactorizationMismatch("factor times linear variables does not "
                                "reproduce the minimal generators");

  IndexSet vars = set_of(report.linear_vars);
  if (set_size(vars) != report.r ||
      (vars & report.common_factor->support()) != 0)
    throw FactorizationMismatch("linear variables are not distinct and "
                                "disjoint from the common factor");
  return report;
}

void special_formulas(SpecialClassReport& report,
                      const LinearQuotientsCertificate& cert) {
  if (!report.is_special) throw NotSpecial();
  BettiTable closed;
  for (int i = 0; i <= report.r - 1; ++i)
    closed.add(i, i + report.pi_length, binomial(report.r, i + 1));
  BettiTable general = betti_from_certificate(cert);
  if (!(closed == general))
    throw PropertyViolation("special-class Betti numbers C(r,i+1) disagree "
                            "with the certificate route");
  report.betti = closed;

  HilbertNumerator numerator;
  for (int i = 0; i <= report.r - 1; ++i) {
    long long value = binomial(report.r, i + 1);
    numerator.coeff[i + report.pi_length] = i % 2 == 0 ? value : -value;
  }
  if (!numerator.same_coefficients(hilbert_numerator_from_certificate(cert)))
    throw PropertyViolation("special-class Hilbert numerator disagrees with "
                            "the resolution route");
  report.numerator = numerator;
}

bool census_check(const CoxeterSystem& sys, const Word& q, const GroupElement& pi,
                  SpecialClassReport& report, int census_limit) {
  if (!report.is_special) throw NotSpecial();
  std::map<int, long long> census = demazure_census(sys, q, pi, census_limit);
  bool ok = true;
  for (int j = 0; j <= report.n - report.pi_length; ++j) {
    long long expected = j <= report.r - 1 ? binomial(report.r, j + 1) : 0;
    auto it = census.find(j + report.pi_length);
    long long got = it == census.end() ? 0 : it->second;
    if (got != expected) ok = false;
  }
  report.census_ok = ok;
  return ok;
}

bool sphere_criterion(const CoxeterSystem& sys, const Word& q,
                      const GroupElement& pi, SpecialClassReport& report) {
  if (!report.is_special) throw NotSpecial();
  bool verdict = report.r == report.n - report.pi_length + 1;
  report.is_sphere = verdict;

  bool demazure_full = demazure_product(sys, q) == pi;
  if (demazure_full != verdict)
    throw PropertyViolation("sphere criterion r = n - length + 1 disagrees "
                            "with the Demazure product of the whole word");

  if (report.n <= 14) {
    HomologyProfile profile = simplicial_homology(subword_complex(sys, q, pi));
    int top = report.n - report.pi_length - 1;
    bool homology_ok = verdict ? profile.is_sphere_profile(top) : profile.all_zero();
    if (!homology_ok)
      throw PropertyViolation(verdict
                                  ? "expected the homology of a sphere of "
                                    "dimension n - length - 1"
                                  : "expected vanishing reduced homology off "
                                    "the sphere case");
    report.sphere_homology_checked = true;
  } else {
    report.sphere_homology_checked = false;
  }
  return verdict;
}

void ci_and_cm(SpecialClassReport& report, const SimplicialComplex& complex) {
  if (!report.is_special) throw NotSpecial();
  if (!report.common_factor.has_value())
    throw InputError("factorization missing; run detect_and_factor first");
  int n = report.n;

  std::vector<SquarefreeMonomial> gens;
  gens.emplace_back(n, set_of(report.linear_vars));
  for (int k : set_elements(report.common_factor->support()))
    gens.emplace_back(n, singleton(k));
  MonomialIdeal formula(n, std::move(gens));

  MonomialIdeal nonfaces = minimal_nonfaces(complex);
  if (!formula.same_ideal(nonfaces))
    throw CIGeneratorMismatch("formula gave " + std::to_string(formula.gens().size()) +
                              " generators, minimal non-faces gave " +
                              std::to_string(nonfaces.gens().size()));
  report.ci_generators = formula;

  bool disjoint = true;
  for (std::size_t i = 0; i < formula.gens().size() && disjoint; ++i)
    for (std::size_t j = i + 1; j < formula.gens().size() && disjoint; ++j)
      disjoint = (formula.gens()[i].support() & formula.gens()[j].support()) == 0;
  if (!disjoint)
    throw CIGeneratorMismatch("generator supports are not pairwise disjoint");
  report.ci_disjoint_supports = true;

  report.cm_dual = report.r == 1;
}

}  // namespace subword
