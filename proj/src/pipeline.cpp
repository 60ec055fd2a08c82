#include "subword/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "subword/errors.hpp"
#include "subword/oracles.hpp"

namespace subword {

namespace {

inline constexpr int kHochsterGate = 10;
inline constexpr int kHomologyGate = 14;
inline constexpr int kShiftedGate = 9;
inline constexpr int kNonfaceGate = 20;

std::vector<int> set_list(IndexSet s) { return set_elements(s); }

std::vector<std::vector<int>> set_lists(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (IndexSet s : sets) out.push_back(set_elements(s));
  return out;
}

struct CheckRecorder {
  std::vector<CheckResult> checks;

  void pass(const std::string& name) { checks.push_back({name, CheckStatus::pass, ""}); }
  void fail(const std::string& name, const std::string& note) {
    checks.push_back({name, CheckStatus::fail, note});
  }
  void skip(const std::string& name, const std::string& note) {
    checks.push_back({name, CheckStatus::skipped, note});
  }
  void verdict(const std::string& name, bool ok, const std::string& note) {
    if (ok) pass(name);
    else fail(name, note);
  }
  /// Runs fn, mapping a false return or a PropertyViolation to a failure.
  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    try {
      bool ok = fn();
      verdict(name, ok, ok ? "" : "predicate failed");
    } catch (const PropertyViolation& violation) {
      fail(name, violation.what());
    }
  }
};

}  // namespace

std::string status_string(const CheckResult& check) {
  switch (check.status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped:
      return check.note.empty() ? "skipped" : "skipped(" + check.note + ")";
  }
  return "?";
}

std::vector<CheckResult> run_instance_checks(const CoxeterSystem& sys, const Word& q,
                                             const GroupElement& pi,
                                             int census_limit,
                                             const GroupElement* extra) {
  CheckRecorder rec;
  const int n = q.size();
  const int lpi = pi.length();

  std::vector<Subword> reps = representations(sys, q, pi);
  SimplicialComplex complex = subword_complex(sys, q, pi);
  MonomialIdeal dual = alexander_dual_ideal(complex);

  rec.run("pure_dimension", [&] {
    if (!complex.is_pure() || complex.dimension() != n - lpi - 1) return false;
    for (const Subword& p : reps)
      if (static_cast<int>(p.size()) != lpi) return false;
    return true;
  });

  rec.run("dual_bijection", [&] {
    if (static_cast<int>(dual.gens().size()) != static_cast<int>(reps.size())) return false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      IndexSet expected = set_of(reps[i]);
      if (dual.gens()[i].support() != expected) return false;
      if ((complex.facets()[i] ^ expected) != full_set(n)) return false;
    }
    std::vector<SquarefreeMonomial> sorted = lex_sorted_desc(dual);
    return std::equal(sorted.begin(), sorted.end(), dual.gens().begin(),
                      [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
                        return a.support() == b.support();
                      });
  });

  LinearQuotientsResult lq = lex_linear_quotients(dual);
  rec.verdict("dual_linear_quotients", lq.success(),
              lq.success() ? ""
                           : "lex order rejected at generator " +
                                 std::to_string(lq.failure_index));

  std::vector<IndexSet> rep_supports;
  rep_supports.reserve(reps.size());
  for (const Subword& p : reps) rep_supports.push_back(set_of(p));

  if (lq.success()) {
    const LinearQuotientsCertificate& cert = *lq.certificate;

    rec.run("dual_sets_min_rule",
            [&] { return set_via_min_formula(rep_supports) == cert.sets; });

    rec.run("set_upper_bound", [&] {
      for (std::size_t i = 0; i < cert.sets.size(); ++i) {
        IndexSet allowed =
            full_set(cert.order[i].max_var()) & ~cert.order[i].support();
        if (!is_subset(cert.sets[i], allowed)) return false;
      }
      return true;
    });

    rec.run("set_size_chain", [&] {
      for (std::size_t i = 0; i < cert.d.size(); ++i)
        if (cert.d[i] == static_cast<int>(i))
          for (std::size_t j = 0; j < i; ++j)
            if (cert.d[j] != static_cast<int>(j)) return false;
      return true;
    });

    rec.run("projdim_within_bound", [&] { return projdim_bound_check(cert, n, lpi); });
    rec.run("regularity_within_bound",
            [&] { return cert.max_d() + 1 <= n - lpi + 1; });

    rec.run("lex_order_is_shelling",
            [&] { return is_shelling(complex, complex.facets()); });
    rec.run("vertex_decomposition_matches_lex", [&] {
      return vertex_decompose_shelling(sys, q, pi) == complex.facets();
    });

    if (n <= kHochsterGate) {
      rec.run("betti_matches_hochster",
              [&] { return betti_from_certificate(cert) == hochster_betti(dual); });
      MonomialIdeal sr = minimal_nonfaces(complex);
      BettiTable sr_betti = hochster_betti(sr);
      rec.run("kdelta_projdim_is_length",
              [&] { return sr_betti.projdim() + 1 == lpi; });
      rec.run("regularity_matches_hochster",
              [&] { return sr_betti.regularity() == cert.max_d() + 1; });
    } else {
      rec.skip("betti_matches_hochster", "n=" + std::to_string(n));
      rec.skip("kdelta_projdim_is_length", "n=" + std::to_string(n));
      rec.skip("regularity_matches_hochster", "n=" + std::to_string(n));
    }

    if (n <= kHomologyGate) {
      rec.run("homology_below_top_vanishes", [&] {
        return simplicial_homology(complex).vanishes_below(complex.dimension());
      });
    } else {
      rec.skip("homology_below_top_vanishes", "n=" + std::to_string(n));
    }

    if (n <= census_limit) {
      std::map<int, long long> census = demazure_census(sys, q, pi, census_limit);
      rec.run("hilbert_routes_agree", [&] {
        return hilbert_numerator_from_certificate(cert).same_coefficients(
            hilbert_numerator_from_census(census));
      });
      rec.run("census_counts_representations", [&] {
        auto it = census.find(lpi);
        return it != census.end() &&
               it->second == static_cast<long long>(reps.size());
      });
    } else {
      rec.skip("hilbert_routes_agree", "n=" + std::to_string(n));
      rec.skip("census_counts_representations", "n=" + std::to_string(n));
    }

    // special class
    try {
      SpecialClassReport special = detect_and_factor(cert, rep_supports, n, lpi);
      if (!special.is_special) {
        rec.skip("special_factorization", "not in the special class");
      } else {
        rec.pass("special_factorization");
        // height is 1 whenever the common factor is a genuine monomial (its
        // variables give height-one minimal primes) or the ideal is
        // principal; when the factor degenerates to the unit the ideal is
        // generated by r single variables and the height is r instead.
        bool degenerate = special.common_factor->is_unit() && special.r >= 2;
        rec.run("special_height", [&] {
          return height(dual) == (degenerate ? special.r : 1);
        });
        if (degenerate)
          rec.checks.back().note = "unit common factor: height equals r, not 1";
        rec.run("special_betti_binomial", [&] {
          special_formulas(special, cert);
          return true;
        });
        if (n <= census_limit)
          rec.run("special_census_binomial",
                  [&] { return census_check(sys, q, pi, special, census_limit); });
        else
          rec.skip("special_census_binomial", "n=" + std::to_string(n));
        rec.run("special_sphere_criterion", [&] {
          sphere_criterion(sys, q, pi, special);
          return true;
        });
        if (n <= kNonfaceGate)
          rec.run("special_ci_generators", [&] {
            ci_and_cm(special, complex);
            return special.ci_disjoint_supports;
          });
        else
          rec.skip("special_ci_generators", "n=" + std::to_string(n));
        rec.run("special_cm_iff_principal", [&] {
          return special.cm_dual.value_or(special.r == 1) == (special.r == 1);
        });
      }
    } catch (const PropertyViolation& violation) {
      rec.fail("special_factorization", violation.what());
    }
  } else {
    for (const char* name :
         {"dual_sets_min_rule", "set_upper_bound", "set_size_chain",
          "projdim_within_bound", "regularity_within_bound", "lex_order_is_shelling",
          "vertex_decomposition_matches_lex", "betti_matches_hochster",
          "kdelta_projdim_is_length", "regularity_matches_hochster",
          "homology_below_top_vanishes", "hilbert_routes_agree",
          "census_counts_representations", "special_factorization"})
      rec.skip(name, "no linear-quotient certificate");
  }

  // greedy routines against the exhaustive oracles
  if (n <= 18) {
    rec.run("contains_greedy_vs_oracle", [&] {
      if (contains(sys, q, pi) != exhaustive_contains(sys, q, pi)) return false;
      if (extra && contains(sys, q, *extra) != exhaustive_contains(sys, q, *extra))
        return false;
      return true;
    });
  } else {
    rec.skip("contains_greedy_vs_oracle", "n=" + std::to_string(n));
  }

  GroupElement delta_q = demazure_product(sys, q);
  if (delta_q.length() <= 12) {
    rec.run("bruhat_greedy_vs_oracle", [&] {
      if (bruhat_leq(sys, pi, delta_q) != exhaustive_bruhat(sys, pi, delta_q))
        return false;
      if (!bruhat_leq(sys, pi, delta_q)) return false;  // contained instance
      if (extra) {
        if (bruhat_leq(sys, *extra, delta_q) != exhaustive_bruhat(sys, *extra, delta_q))
          return false;
        if (extra->length() <= 12 &&
            bruhat_leq(sys, pi, *extra) != exhaustive_bruhat(sys, pi, *extra))
          return false;
      }
      return true;
    });
  } else {
    rec.skip("bruhat_greedy_vs_oracle", "length=" + std::to_string(delta_q.length()));
  }

  rec.run("demazure_fold_properties", [&] {
    if (!(demazure_product(sys, lex_first_reduced_word(sys, pi)) == pi)) return false;
    // duplicating a letter adjacently never changes the fold value
    std::vector<int> doubled;
    doubled.reserve(static_cast<std::size_t>(q.size()) + 1);
    doubled.push_back(q.letter(1));
    doubled.insert(doubled.end(), q.letters.begin(), q.letters.end());
    return demazure_product(sys, Word(std::move(doubled))) == delta_q;
  });

  return rec.checks;
}

// ---------------------------------------------------------------------------
// run_analyze

AnalysisReport run_analyze(const InstanceSpec& spec, const AnalyzeOptions& options) {
  CoxeterSystem sys = spec.make_system();
  for (int s : spec.word.letters) sys.check_generator(s);
  GroupElement pi = spec.make_pi(sys);
  if (pi.is_identity()) throw DegeneratePi();
  if (!contains(sys, spec.word, pi)) throw NotContained();

  AnalysisReport report;
  report.system = sys.name();
  report.word = spec.word;
  report.pi = sys.describe(pi);
  report.pi_word = lex_first_reduced_word(sys, pi);
  report.n = spec.word.size();
  report.pi_length = pi.length();

  SimplicialComplex complex = subword_complex(sys, spec.word, pi);
  MonomialIdeal dual = alexander_dual_ideal(complex);
  report.facets = set_lists(complex.facets());
  for (const auto& g : dual.gens()) report.dual_generators.push_back(set_list(g.support()));

  LinearQuotientsResult lq = lex_linear_quotients(dual);
  if (lq.success()) {
    report.quotient_sets = set_lists(lq.certificate->sets);
    report.quotient_d = lq.certificate->d;
    report.projdim = lq.certificate->max_d();
    report.betti = betti_from_certificate(*lq.certificate);
    report.numerator = hilbert_numerator_from_certificate(*lq.certificate);
  }
  report.projdim_bound = report.n - report.pi_length;
  report.projdim_within = report.projdim <= report.projdim_bound;
  report.regularity = report.projdim + 1;
  report.regularity_bound = report.n - report.pi_length + 1;
  report.regularity_within = report.regularity <= report.regularity_bound;

  report.shelling_lex = set_lists(complex.facets());
  try {
    ShellingOrder vds = vertex_decompose_shelling(sys, spec.word, pi);
    report.shelling_vertex_decomposition = set_lists(vds);
    report.shellings_coincide = vds == complex.facets();
  } catch (const PropertyViolation&) {
    report.shellings_coincide = false;
  }

  if (report.n <= options.census_limit) {
    HilbertNumerator fine = hilbert_numerator_fine(sys, spec.word, pi, options.census_limit);
    report.numerator.fine = fine.fine;
  }

  if (report.n <= kShiftedGate) report.shifted = is_shifted(complex);

  if (lq.success()) {
    std::vector<IndexSet> rep_supports;
    for (const auto& g : dual.gens()) rep_supports.push_back(g.support());
    try {
      report.special = detect_and_factor(*lq.certificate, rep_supports, report.n,
                                         report.pi_length);
      if (report.special.is_special) {
        special_formulas(report.special, *lq.certificate);
        if (report.n <= options.census_limit)
          census_check(sys, spec.word, pi, report.special, options.census_limit);
        sphere_criterion(sys, spec.word, pi, report.special);
        if (report.n <= kNonfaceGate) ci_and_cm(report.special, complex);
      }
    } catch (const PropertyViolation&) {
      // recorded below by the check suite
    }
  }

  GroupElement extra = demazure_product(sys, spec.word);
  report.checks = run_instance_checks(sys, spec.word, pi, options.census_limit, &extra);
  return report;
}

bool AnalysisReport::all_passed() const {
  for (const CheckResult& check : checks)
    if (check.status == CheckStatus::fail) return false;
  return true;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

nlohmann::ordered_json betti_to_json(const BettiTable& betti) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, value] : betti.entries())
    rows.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  return rows;
}

nlohmann::ordered_json numerator_to_json(const HilbertNumerator& numerator) {
  nlohmann::ordered_json out;
  out["polynomial"] = numerator.to_string();
  nlohmann::ordered_json coeff = nlohmann::ordered_json::object();
  for (const auto& [degree, value] : numerator.coeff)
    coeff[std::to_string(degree)] = value;
  out["coefficients"] = coeff;
  if (numerator.fine) {
    nlohmann::ordered_json fine = nlohmann::ordered_json::array();
    for (const auto& [mask, sign] : *numerator.fine) {
      std::vector<int> positions;
      for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) positions.push_back(i + 1);
      fine.push_back({{"positions", positions}, {"coeff", sign}});
    }
    out["fine"] = fine;
  }
  return out;
}

nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CheckResult& check : checks) {
    nlohmann::ordered_json row;
    row["name"] = check.name;
    row["status"] = status_string(check);
    if (!check.note.empty() && check.status != CheckStatus::skipped)
      row["note"] = check.note;
    out.push_back(row);
  }
  return out;
}

}  // namespace

nlohmann::ordered_json special_report_to_json(const SpecialClassReport& report) {
  nlohmann::ordered_json out;
  out["r"] = report.r;
  out["n"] = report.n;
  out["pi_length"] = report.pi_length;
  out["is_special"] = report.is_special;
  if (!report.is_special) return out;
  out["pivot"] = *report.pivot;
  out["common_factor"] = set_list(report.common_factor->support());
  out["linear_vars"] = report.linear_vars;
  out["betti"] = betti_to_json(report.betti);
  out["numerator"] = report.numerator.to_string();
  if (report.census_ok) out["census_ok"] = *report.census_ok;
  if (report.is_sphere) {
    out["is_sphere"] = *report.is_sphere;
    out["sphere_homology_checked"] = report.sphere_homology_checked.value_or(false);
  }
  if (report.ci_generators) {
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : report.ci_generators->gens()) gens.push_back(set_list(g.support()));
    out["ci_generators"] = gens;
    out["complete_intersection"] = report.ci_disjoint_supports;
  }
  if (report.cm_dual) out["cm_dual"] = *report.cm_dual;
  return out;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
  nlohmann::ordered_json out;
  out["instance"] = {{"system", report.system},
                     {"word", report.word.letters},
                     {"pi", report.pi},
                     {"pi_word", report.pi_word.letters},
                     {"n", report.n},
                     {"pi_length", report.pi_length}};
  out["facets"] = report.facets;
  out["dual_generators"] = report.dual_generators;
  out["linear_quotients"] = {{"sets", report.quotient_sets}, {"d", report.quotient_d}};
  out["projdim"] = {{"value", report.projdim},
                    {"bound", report.projdim_bound},
                    {"within", report.projdim_within}};
  out["regularity"] = {{"value", report.regularity},
                       {"bound", report.regularity_bound},
                       {"within", report.regularity_within}};
  nlohmann::ordered_json shelling;
  shelling["lex_order"] = report.shelling_lex;
  shelling["vertex_decomposition"] = report.shelling_vertex_decomposition;
  if (report.shellings_coincide) shelling["coincide"] = *report.shellings_coincide;
  out["shelling"] = shelling;
  out["betti"] = betti_to_json(report.betti);
  out["hilbert_numerator"] = numerator_to_json(report.numerator);
  if (report.shifted) out["shifted"] = *report.shifted;
  else out["shifted"] = "skipped(n=" + std::to_string(report.n) + ")";
  out["special"] = special_report_to_json(report.special);
  out["checks"] = checks_to_json(report.checks);
  out["ok"] = report.all_passed();
  return out;
}

namespace {

std::string join_sets(const std::vector<std::vector<int>>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += " ";
    out += set_to_string(set_of(sets[i]));
  }
  return out;
}

}  // namespace

std::string special_report_to_text(const SpecialClassReport& report) {
  std::ostringstream out;
  out << "special class: r=" << report.r << " n=" << report.n
      << " pi_length=" << report.pi_length
      << (report.is_special ? "  -> special" : "  -> not special") << "\n";
  if (!report.is_special) return out.str();
  out << "  pivot l = x" << *report.pivot << "\n";
  out << "  common factor = " << report.common_factor->to_pretty() << "\n";
  out << "  linear variables =";
  for (int v : report.linear_vars) out << " x" << v;
  out << "\n  numerator = " << report.numerator.to_string() << "\n";
  if (report.census_ok)
    out << "  census matches C(r,j+1): " << (*report.census_ok ? "yes" : "NO") << "\n";
  if (report.is_sphere)
    out << "  sphere: " << (*report.is_sphere ? "yes" : "no")
        << (report.sphere_homology_checked.value_or(false) ? " (homology-verified)" : "")
        << "\n";
  if (report.ci_generators) {
    out << "  Stanley-Reisner ideal:";
    for (const auto& g : report.ci_generators->gens()) out << " " << g.to_pretty();
    out << "\n  complete intersection: " << (report.ci_disjoint_supports ? "yes" : "NO")
        << "\n";
  }
  if (report.cm_dual)
    out << "  dual ring Cohen-Macaulay (= principal dual ideal): "
        << (*report.cm_dual ? "yes" : "no") << "\n";
  return out.str();
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "instance: " << report.system << "  Q=(" << report.word.to_string()
      << ")  pi=" << report.pi << "  (reduced word " << report.pi_word.to_string()
      << ", length " << report.pi_length << ", n=" << report.n << ")\n";
  out << "facets (lex-dual order): " << join_sets(report.facets) << "\n";
  out << "dual generators:         " << join_sets(report.dual_generators) << "\n";
  out << "quotient sets:           " << join_sets(report.quotient_sets) << "\n";
  out << "d_i:                    ";
  for (int d : report.quotient_d) out << " " << d;
  out << "\n";
  out << "projdim(dual ideal) = " << report.projdim << "  (bound " << report.projdim_bound
      << ", " << (report.projdim_within ? "within" : "VIOLATED") << ")\n";
  out << "reg(SR ideal)       = " << report.regularity << "  (bound "
      << report.regularity_bound << ", "
      << (report.regularity_within ? "within" : "VIOLATED") << ")\n";
  out << "vertex-decomposition shelling "
      << (report.shellings_coincide.value_or(false) ? "coincides with" : "DIFFERS from")
      << " the lex-dual order\n";
  out << "betti (i,j,value):";
  for (const auto& [key, value] : report.betti.entries())
    out << "  (" << key.first << "," << key.second << "," << value << ")";
  out << "\n";
  out << "hilbert numerator: " << report.numerator.to_string() << "\n";
  if (report.shifted)
    out << "shifted: " << (*report.shifted ? "yes" : "no") << "\n";
  else
    out << "shifted: skipped(n=" << report.n << ")\n";
  out << special_report_to_text(report.special);
  out << "checks:\n";
  for (const CheckResult& check : report.checks) {
    out << "  [" << status_string(check) << "] " << check.name;
    if (!check.note.empty() && check.status != CheckStatus::skipped)
      out << "  " << check.note;
    out << "\n";
  }
  out << (report.all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace subword
