#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subword/complexes.hpp"
#include "subword/ideals.hpp"
#include "subword/instance.hpp"
#include "subword/special.hpp"
#include "subword/words.hpp"

namespace subword {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string note;  // failure detail or skip reason
};

std::string status_string(const CheckResult& check);

struct AnalyzeOptions {
  int census_limit = kDefaultCensusLimit;
};

struct AnalysisReport {
  // instance echo
  std::string system;
  Word word;
  std::string pi;           // backing-data form
  Word pi_word;             // lex-first reduced word
  int n = 0;
  int pi_length = 0;

  std::vector<std::vector<int>> facets;           // lex-dual order
  std::vector<std::vector<int>> dual_generators;  // lex-decreasing
  std::vector<std::vector<int>> quotient_sets;    // set(u_i)
  std::vector<int> quotient_d;

  int projdim = 0;
  int projdim_bound = 0;
  bool projdim_within = false;
  int regularity = 0;
  int regularity_bound = 0;
  bool regularity_within = false;

  std::vector<std::vector<int>> shelling_lex;
  std::vector<std::vector<int>> shelling_vertex_decomposition;
  std::optional<bool> shellings_coincide;

  BettiTable betti;
  HilbertNumerator numerator;  // fine part present when the census ran
  std::optional<bool> shifted;  // absent when skipped by size

  SpecialClassReport special;

  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Full deterministic analysis of one instance.  Oracle cross-checks that
/// exceed their size gates are reported as skipped; any failed check makes
/// all_passed() false.
AnalysisReport run_analyze(const InstanceSpec& spec, const AnalyzeOptions& options);

/// The shared per-instance property suite (used by run_analyze and the
/// verify sweeps).  `extra` supplies an unrelated element for the greedy vs
/// oracle agreement checks on non-contained inputs.
std::vector<CheckResult> run_instance_checks(const CoxeterSystem& sys, const Word& q,
                                             const GroupElement& pi,
                                             int census_limit,
                                             const GroupElement* extra = nullptr);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

nlohmann::ordered_json special_report_to_json(const SpecialClassReport& report);
std::string special_report_to_text(const SpecialClassReport& report);

}  // namespace subword
