#include "subword/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "subword/errors.hpp"
#include "subword/oracles.hpp"

namespace subword {

namespace {

CoxeterSystem system_for(const VerifyOptions& options) {
  switch (options.family) {
    case Family::A: return CoxeterSystem::type_a(options.rank);
    case Family::B: return CoxeterSystem::type_b(options.rank);
    case Family::I2: return CoxeterSystem::dihedral(options.m);
  }
  throw InputError("unknown family");
}

InstanceSpec spec_for(const VerifyOptions& options, Word word,
                      const GroupElement& pi) {
  InstanceSpec spec;
  spec.family = options.family;
  spec.rank = options.rank;
  spec.m = options.m;
  spec.word = std::move(word);
  spec.pi_data = pi.data();
  return spec;
}

int worker_count(int requested, std::size_t jobs) {
  int threads = requested;
  if (const char* env = std::getenv("SUBWORD_SHELL_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) threads = threads > 0 ? std::min(threads, cap) : cap;
  }
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  return std::max(1, std::min<int>(threads, static_cast<int>(jobs ? jobs : 1)));
}

}  // namespace

std::vector<InstanceSpec> random_corpus(const VerifyOptions& options) {
  CoxeterSystem sys = system_for(options);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> letter(1, sys.rank());
  std::uniform_int_distribution<int> length(1, std::max(1, options.max_word));
  std::vector<InstanceSpec> corpus;
  corpus.reserve(static_cast<std::size_t>(std::max(0, options.count)));
  while (static_cast<int>(corpus.size()) < options.count) {
    int len = length(rng);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& s : letters) s = letter(rng);
    Word word(std::move(letters));
    // pi = Demazure product of a random nonempty position subset: contained
    // by construction and never the identity
    std::vector<int> positions;
    for (int i = 1; i <= len; ++i)
      if (rng() & 1) positions.push_back(i);
    if (positions.empty()) positions.push_back(1 + static_cast<int>(rng() % len));
    std::vector<int> chosen;
    for (int p : positions) chosen.push_back(word.letter(p));
    GroupElement pi = demazure_product(sys, Word(std::move(chosen)));
    corpus.push_back(spec_for(options, std::move(word), pi));
  }
  return corpus;
}

std::vector<InstanceSpec> constructed_corpus(const CoxeterSystem& sys, int max_reps) {
  std::vector<InstanceSpec> corpus;
  VerifyOptions shape;
  shape.family = sys.family();
  shape.rank = sys.rank();
  shape.m = sys.dihedral_m();
  for (const GroupElement& pi : all_elements(sys)) {
    if (pi.is_identity()) continue;
    for (const Word& rw : reduced_words(sys, pi)) {
      for (int position = 1; position <= rw.size(); ++position) {
        for (int reps = 1; reps <= max_reps; ++reps) {
          InstanceSpec spec;
          spec.family = shape.family;
          spec.rank = shape.rank;
          spec.m = shape.m;
          spec.word = make_repeated_word(sys, rw, position, reps);
          spec.pi_data = pi.data();
          corpus.push_back(std::move(spec));
        }
      }
    }
  }
  return corpus;
}

namespace {

struct InstanceOutcome {
  std::vector<CheckResult> checks;
};

// Auxiliary element for the disagreement checks, derived deterministically
// from the instance index.
GroupElement extra_element(const CoxeterSystem& sys, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 12345);
  std::uniform_int_distribution<int> letter(1, sys.rank());
  int len = static_cast<int>(rng() % 9);
  GroupElement g = sys.identity();
  for (int i = 0; i < len; ++i) g = sys.right_multiply(g, letter(rng));
  return g;
}

std::vector<CheckResult> run_one(const InstanceSpec& spec, int census_limit,
                                 std::uint64_t index) {
  CoxeterSystem sys = spec.make_system();
  GroupElement pi = spec.make_pi(sys);
  GroupElement extra = extra_element(sys, index);
  return run_instance_checks(sys, spec.word, pi, census_limit, &extra);
}

// Greedy shrink: drop word positions while the named check still fails.
std::string minimize_reproducer(const InstanceSpec& spec, const std::string& check,
                                int census_limit, std::uint64_t index) {
  auto still_fails = [&](const InstanceSpec& candidate) {
    try {
      for (const CheckResult& result : run_one(candidate, census_limit, index))
        if (result.name == check && result.status == CheckStatus::fail) return true;
    } catch (const std::exception&) {
      return false;  // degenerated into an invalid instance; keep the letter
    }
    return false;
  };
  InstanceSpec current = spec;
  bool shrunk = true;
  int budget = 200;
  while (shrunk && budget > 0) {
    shrunk = false;
    for (int pos = 1; pos <= current.word.size() && budget > 0; ++pos, --budget) {
      InstanceSpec candidate = current;
      candidate.word.letters.erase(candidate.word.letters.begin() + (pos - 1));
      if (candidate.word.empty()) continue;
      if (still_fails(candidate)) {
        current = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return current.flags_string();
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& options) {
  std::vector<InstanceSpec> corpus = random_corpus(options);
  const long long random_count = static_cast<long long>(corpus.size());
  CoxeterSystem sys = system_for(options);
  if (sys.group_order() <= 24) {
    std::vector<InstanceSpec> constructed = constructed_corpus(sys, 4);
    corpus.insert(corpus.end(), constructed.begin(), constructed.end());
  }

  std::vector<InstanceOutcome> outcomes(corpus.size());
  const int threads = worker_count(options.threads, corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) break;
      try {
        outcomes[i].checks = run_one(corpus[i], options.census_limit, i);
      } catch (const std::exception& error) {
        outcomes[i].checks = {{"instance_evaluation", CheckStatus::fail, error.what()}};
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  VerifySummary summary;
  summary.instances = static_cast<long long>(corpus.size());
  summary.random_instances = random_count;
  summary.constructed_instances = summary.instances - random_count;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const CheckResult& check : outcomes[i].checks) {
      SuiteTally& tally = summary.suites[check.name];
      switch (check.status) {
        case CheckStatus::pass: ++tally.pass; break;
        case CheckStatus::fail: ++tally.fail; break;
        case CheckStatus::skipped: ++tally.skipped; break;
      }
      if (check.status == CheckStatus::fail) {
        FailureRecord record;
        record.instance_index = static_cast<long long>(i);
        record.check = check.name;
        record.note = check.note;
        record.reproducer =
            minimize_reproducer(corpus[i], check.name, options.census_limit, i);
        summary.failures.push_back(std::move(record));
      }
    }
  }
  return summary;
}

nlohmann::ordered_json summary_to_json(const VerifySummary& summary) {
  nlohmann::ordered_json out;
  out["instances"] = summary.instances;
  out["random_instances"] = summary.random_instances;
  out["constructed_instances"] = summary.constructed_instances;
  nlohmann::ordered_json suites = nlohmann::ordered_json::object();
  for (const auto& [name, tally] : summary.suites)
    suites[name] = {{"pass", tally.pass}, {"fail", tally.fail}, {"skipped", tally.skipped}};
  out["suites"] = suites;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const FailureRecord& record : summary.failures)
    failures.push_back({{"index", record.instance_index},
                        {"check", record.check},
                        {"note", record.note},
                        {"reproducer", record.reproducer}});
  out["failures"] = failures;
  out["ok"] = summary.ok();
  return out;
}

std::string summary_to_text(const VerifySummary& summary) {
  std::ostringstream out;
  out << "instances: " << summary.instances << " (" << summary.random_instances
      << " random";
  if (summary.constructed_instances > 0)
    out << " + " << summary.constructed_instances << " constructed";
  out << ")\n";
  std::size_t width = 0;
  for (const auto& [name, tally] : summary.suites) width = std::max(width, name.size());
  for (const auto& [name, tally] : summary.suites) {
    out << "  " << name << std::string(width - name.size() + 2, ' ') << "pass "
        << tally.pass << "  fail " << tally.fail << "  skipped " << tally.skipped
        << "\n";
  }
  if (summary.failures.empty()) {
    out << "all invariant suites passed\n";
  } else {
    out << "FAILURES:\n";
    for (const FailureRecord& record : summary.failures)
      out << "  [" << record.instance_index << "] " << record.check << ": "
          << record.note << "\n    reproducer: " << record.reproducer << "\n";
  }
  return out.str();
}

}  // namespace subword
