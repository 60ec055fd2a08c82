#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "subword/errors.hpp"
#include "subword/pipeline.hpp"
#include "subword/verify.hpp"

namespace {

using subword::InstanceSpec;

struct InstanceArgs {
  std::string family = "A";
  int rank = 3;
  int m = 5;
  std::string word;
  std::string pi;
  std::string pi_word;

  InstanceSpec to_spec() const {
    InstanceSpec spec;
    spec.family = InstanceSpec::parse_family(family);
    spec.rank = rank;
    spec.m = m;
    spec.word = subword::Word::parse(word);
    if (!pi.empty() && !pi_word.empty())
      throw subword::ParseError("--pi and --pi-word are mutually exclusive");
    if (pi.empty() && pi_word.empty())
      throw subword::ParseError("one of --pi or --pi-word is required");
    if (!pi.empty()) spec.pi_data = subword::Word::parse(pi).letters;
    else spec.pi_word = subword::Word::parse(pi_word);
    return spec;
  }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--family", args.family, "Coxeter family: A, B or I2");
  cmd->add_option("--rank", args.rank, "rank for families A and B");
  cmd->add_option("--m", args.m, "m for the dihedral family I2");
  cmd->add_option("--word", args.word, "word as comma-separated generator indices")
      ->required();
  cmd->add_option("--pi", args.pi,
                  "target element data: one-line permutation (A), signed window "
                  "(B) or rotation,flag pair (I2)");
  cmd->add_option("--pi-word", args.pi_word, "target element as a reduced word");
}

int print_and_grade(const subword::AnalysisReport& report, const std::string& format) {
  if (format == "json")
    std::cout << subword::report_to_json(report).dump(2) << "\n";
  else
    std::cout << subword::report_to_text(report);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for subword complexes in Coxeter groups"};
  app.require_subcommand(1);

  std::string format = "text";

  InstanceArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "full analysis of one (system, word, element) instance");
  add_instance_options(analyze, analyze_args);
  int analyze_census = subword::kDefaultCensusLimit;
  analyze->add_option("--census-limit", analyze_census,
                      "largest word size enumerated by the census (2^n work)");
  analyze->add_option("--format", format, "text or json");

  auto* verify = app.add_subcommand(
      "verify", "randomized invariant sweep plus the repeated-letter "
                "construction sweep for small groups");
  subword::VerifyOptions verify_options;
  std::string verify_family = "A";
  verify->add_option("--family", verify_family, "Coxeter family: A, B or I2");
  verify->add_option("--rank", verify_options.rank, "rank for families A and B");
  verify->add_option("--m", verify_options.m, "m for the dihedral family I2");
  verify->add_option("--count", verify_options.count, "number of random instances");
  verify->add_option("--max-word", verify_options.max_word, "largest random word size");
  verify->add_option("--seed", verify_options.seed, "corpus seed");
  verify->add_option("--census-limit", verify_options.census_limit,
                     "largest word size enumerated by the census");
  verify->add_option("--format", format, "text or json");

  InstanceArgs census_args;
  auto* census = app.add_subcommand(
      "census", "count subwords by size whose Demazure product is the target");
  add_instance_options(census, census_args);
  int census_limit = subword::kDefaultCensusLimit;
  census->add_option("--census-limit", census_limit,
                     "largest word size enumerated by the census");
  census->add_option("--format", format, "text or json");

  InstanceArgs special_args;
  auto* special = app.add_subcommand(
      "special", "detect and analyze the complete-intersection special class");
  add_instance_options(special, special_args);
  int special_census = subword::kDefaultCensusLimit;
  special->add_option("--census-limit", special_census,
                      "largest word size enumerated by the census");
  special->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);

    if (analyze->parsed()) {
      subword::AnalyzeOptions options;
      options.census_limit = analyze_census;
      return print_and_grade(subword::run_analyze(analyze_args.to_spec(), options),
                             format);
    }

    if (verify->parsed()) {
      verify_options.family = InstanceSpec::parse_family(verify_family);
      subword::VerifySummary summary = subword::run_verify(verify_options);
      if (format == "json")
        std::cout << subword::summary_to_json(summary).dump(2) << "\n";
      else
        std::cout << subword::summary_to_text(summary);
      return summary.ok() ? 0 : 1;
    }

    if (census->parsed()) {
      InstanceSpec spec = census_args.to_spec();
      subword::CoxeterSystem sys = spec.make_system();
      subword::GroupElement pi = spec.make_pi(sys);
      auto counts = subword::demazure_census(sys, spec.word, pi, census_limit);
      if (format == "json") {
        nlohmann::ordered_json out;
        nlohmann::ordered_json by_size = nlohmann::ordered_json::object();
        for (const auto& [size, count] : counts) by_size[std::to_string(size)] = count;
        out["census"] = by_size;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "size  count\n";
        for (const auto& [size, count] : counts)
          std::cout << size << "     " << count << "\n";
      }
      return 0;
    }

    // special
    subword::AnalyzeOptions options;
    options.census_limit = special_census;
    subword::AnalysisReport report =
        subword::run_analyze(special_args.to_spec(), options);
    if (format == "json")
      std::cout << subword::special_report_to_json(report.special).dump(2) << "\n";
    else
      std::cout << subword::special_report_to_text(report.special);
    return report.all_passed() ? 0 : 1;
  } catch (const CLI::ParseError& error) {
    if (error.get_exit_code() == 0) {  // --help
      app.exit(error);
      return 0;
    }
    std::cerr << error.what() << "\n";
    return 2;
  } catch (const subword::InputError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const subword::PropertyViolation& error) {
    std::cerr << "property violation: " << error.what() << "\n";
    return 1;
  }
}
