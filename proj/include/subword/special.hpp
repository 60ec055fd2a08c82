#pragma once

#include <optional>
#include <vector>

#include "subword/complexes.hpp"
#include "subword/coxeter.hpp"
#include "subword/ideals.hpp"

namespace subword {

/// Analysis record for the special class: r <= n - length(pi) + 1 and
/// d_r = r - 1.  Every closed-form value recorded here is recomputed by a
/// general-purpose route before being trusted; mismatches throw.
struct SpecialClassReport {
  int r = 0;
  int n = 0;
  int pi_length = 0;
  bool is_special = false;

  std::optional<int> pivot;                      // the variable l
  std::optional<SquarefreeMonomial> common_factor;  // x_{P_r} / x_l
  std::vector<int> linear_vars;  // min(P_1\P_r), ..., min(P_{r-1}\P_r), l

  BettiTable betti;                 // beta_i = C(r, i+1)
  HilbertNumerator numerator;       // sum (-1)^i C(r,i+1) t^{i+len}
  std::optional<bool> census_ok;
  std::optional<bool> is_sphere;    // homology-verified when homology ran
  std::optional<bool> sphere_homology_checked;
  std::optional<MonomialIdeal> ci_generators;  // Stanley-Reisner ideal I_Delta
  bool ci_disjoint_supports = false;
  std::optional<bool> cm_dual;      // r == 1
};

/// Detects the class and, when present, extracts the unique pivot l with
/// x_{P_j} = x_{min(P_j \ P_r)} * x_{P_r} / x_l for all j < r, verifying that
/// the factorization reproduces the generators exactly.  For r = 1 any pivot
/// works; the largest support element is chosen.
SpecialClassReport detect_and_factor(const LinearQuotientsCertificate& cert,
                                     const std::vector<IndexSet>& rep_supports,
                                     int n, int pi_length);

/// Fills in the closed-form Betti table and Hilbert numerator, cross-checking
/// both against the certificate routes.
void special_formulas(SpecialClassReport& report,
                      const LinearQuotientsCertificate& cert);

/// True iff the Demazure census equals m_{j+len} = C(r, j+1) for j < r and
/// vanishes for j >= r.
bool census_check(const CoxeterSystem& sys, const Word& q, const GroupElement& pi,
                  SpecialClassReport& report,
                  int census_limit = kDefaultCensusLimit);

/// Sphere verdict r == n - length(pi) + 1, cross-checked against the Demazure
/// product of the whole word and (when n <= 14) against the homology profile
/// of a sphere of dimension n - length(pi) - 1.
bool sphere_criterion(const CoxeterSystem& sys, const Word& q,
                      const GroupElement& pi, SpecialClassReport& report);

/// Builds I_Delta = (prod of linear vars) + (x_k : k in supp(common factor)),
/// verifies it equals the minimal non-faces of the complex, records the
/// complete-intersection disjointness and the Cohen-Macaulay-dual verdict
/// (r == 1).
void ci_and_cm(SpecialClassReport& report, const SimplicialComplex& complex);

}  // namespace subword
