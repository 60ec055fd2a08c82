#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "subword/instance.hpp"
#include "subword/pipeline.hpp"

namespace subword {

struct VerifyOptions {
  Family family = Family::A;
  int rank = 3;
  int m = 5;
  int count = 500;
  int max_word = 8;
  std::uint64_t seed = 1;
  int census_limit = kDefaultCensusLimit;
  int threads = 0;  // 0 = hardware default, capped by SUBWORD_SHELL_THREADS
};

struct SuiteTally {
  long long pass = 0;
  long long fail = 0;
  long long skipped = 0;
};

struct FailureRecord {
  long long instance_index = 0;
  std::string check;
  std::string note;
  std::string reproducer;  // minimized instance flags
};

struct VerifySummary {
  long long instances = 0;
  long long random_instances = 0;
  long long constructed_instances = 0;
  std::map<std::string, SuiteTally> suites;
  std::vector<FailureRecord> failures;

  bool ok() const { return failures.empty(); }
};

/// Deterministic random corpus: words of length 1..max_word with uniform
/// letters; pi is the Demazure product of a random nonempty position subset
/// (hence contained and never the identity).  An auxiliary random element is
/// attached for the non-contained agreement checks.
std::vector<InstanceSpec> random_corpus(const VerifyOptions& options);

/// The repeated-letter constructions: every reduced word of every
/// non-identity element, every position, 1..max_reps repetitions.  Intended
/// for small groups (the sweep enumerates all reduced words).
std::vector<InstanceSpec> constructed_corpus(const CoxeterSystem& sys, int max_reps);

/// Runs the invariant suites over the random corpus (and, for groups of
/// order <= 24, the constructed corpus as well), distributing instances over
/// a worker pool.  Any failure carries a minimized reproducer.
VerifySummary run_verify(const VerifyOptions& options);

nlohmann::ordered_json summary_to_json(const VerifySummary& summary);
std::string summary_to_text(const VerifySummary& summary);

}  // namespace subword
