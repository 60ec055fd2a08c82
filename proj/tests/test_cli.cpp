#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Exercises the installed command-line surface end to end: flags, output
// formats and the exit-code contract (0 ok, 1 property violation, 2 bad
// input).

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
  std::string command = std::string(SUBWORD_SHELL_BIN) + " " + args + " > " +
                        path + " 2>&1";
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(path.c_str());
  return result;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze json output") {
  RunResult result = run_cli(
      "analyze --family A --rank 3 --word 1,2,1,3,1,2,3,1 --pi-word 1,2,3,2 "
      "--format json");
  REQUIRE(result.exit_code == 0);
  nlohmann::json json = nlohmann::json::parse(result.output);
  CHECK(json["instance"]["system"] == "A3");
  CHECK(json["facets"][0] == nlohmann::json({3, 5, 7, 8}));
  CHECK(json["dual_generators"][0] == nlohmann::json({1, 2, 4, 6}));
  CHECK(json["linear_quotients"]["sets"][3] == nlohmann::json({1, 3}));
  CHECK(json["hilbert_numerator"]["polynomial"] == "4t^4 - 4t^5 + t^6");
  CHECK(json["shifted"] == false);
  CHECK(json["ok"] == true);
}

TEST_CASE("analyze accepts one-line pi and prints text") {
  RunResult result = run_cli(
      "analyze --family A --rank 3 --word 1,2,3 --pi 2,3,4,1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("facets") != std::string::npos);
  CHECK(result.output.find("{}") != std::string::npos);  // single empty facet
}

TEST_CASE("analyze handles the B and I2 backends") {
  RunResult b = run_cli(
      "analyze --family B --rank 2 --word 1,2,1,2,1 --pi-word 1,2,1 --format json");
  REQUIRE(b.exit_code == 0);
  nlohmann::json bj = nlohmann::json::parse(b.output);
  CHECK(bj["instance"]["system"] == "B2");
  CHECK(bj["instance"]["pi"] == "[-2,-1]");
  CHECK(bj["ok"] == true);

  RunResult i2 = run_cli(
      "analyze --family I2 --m 5 --word 1,2,1,2,1 --pi 2,1 --format json");
  REQUIRE(i2.exit_code == 0);
  nlohmann::json ij = nlohmann::json::parse(i2.output);
  CHECK(ij["instance"]["system"] == "I2(5)");
  CHECK(ij["facets"] == nlohmann::json::array({{1, 5}}));
  CHECK(ij["ok"] == true);
}

TEST_CASE("analyze is byte-deterministic") {
  std::string args =
      "analyze --family A --rank 3 --word 1,2,2,2,3 --pi-word 1,2,3 --format json";
  CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("exit code 2 on bad input") {
  CHECK(run_cli("analyze --family A --rank 3 --word 1,9 --pi-word 1").exit_code == 2);
  CHECK(run_cli("analyze --family A --rank 3 --word 1,1 --pi-word 2").exit_code == 2);
  CHECK(run_cli("analyze --family Z --rank 3 --word 1 --pi-word 1").exit_code == 2);
  CHECK(run_cli("analyze --family A --rank 3 --word 1,1 --pi-word 1,1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  // identity target is rejected
  CHECK(run_cli("analyze --family A --rank 3 --word 1,2 --pi 1,2,3,4").exit_code == 2);
}

TEST_CASE("census command") {
  RunResult result = run_cli(
      "census --family A --rank 3 --word 1,2,2,2,3 --pi-word 1,2,3 --format json");
  REQUIRE(result.exit_code == 0);
  nlohmann::json json = nlohmann::json::parse(result.output);
  CHECK(json["census"]["3"] == 3);
  CHECK(json["census"]["4"] == 3);
  CHECK(json["census"]["5"] == 1);

  CHECK(run_cli("census --family A --rank 3 --word 1,2,1,3,1,2,3,1 "
                "--pi-word 1,2,3,2 --census-limit 4")
            .exit_code == 2);
}

TEST_CASE("special command") {
  RunResult result = run_cli(
      "special --family A --rank 3 --word 1,2,2,2,3 --pi-word 1,2,3 --format json");
  REQUIRE(result.exit_code == 0);
  nlohmann::json json = nlohmann::json::parse(result.output);
  CHECK(json["is_special"] == true);
  CHECK(json["pivot"] == 4);
  CHECK(json["ci_generators"][0] == nlohmann::json({2, 3, 4}));

  RunResult not_special = run_cli(
      "special --family A --rank 3 --word 1,2,1,3,1,2,3,1 --pi-word 1,2,3,2 "
      "--format json");
  CHECK(not_special.exit_code == 0);
  CHECK(nlohmann::json::parse(not_special.output)["is_special"] == false);
}

TEST_CASE("verify command") {
  RunResult result = run_cli("verify --family A --rank 3 --count 10 --seed 5 "
                             "--max-word 6 --format json");
  REQUIRE(result.exit_code == 0);
  nlohmann::json json = nlohmann::json::parse(result.output);
  CHECK(json["ok"] == true);
  CHECK(json["failures"].empty());
  CHECK(json["suites"]["dual_linear_quotients"]["fail"] == 0);

  RunResult i2 = run_cli("verify --family I2 --m 5 --count 8 --seed 5");
  CHECK(i2.exit_code == 0);
}

TEST_CASE("verify respects the thread cap variable") {
  RunResult result = run_cli("verify --family A --rank 3 --count 6 --seed 2");
  CHECK(result.exit_code == 0);
  std::string env_run = "SUBWORD_SHELL_THREADS=1 " + std::string(SUBWORD_SHELL_BIN) +
                        " verify --family A --rank 3 --count 6 --seed 2 > "
                        "cli_thread_out.txt 2>&1";
  int status = std::system(env_run.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream in("cli_thread_out.txt");
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == result.output);
  std::remove("cli_thread_out.txt");
}

TEST_SUITE_END();
