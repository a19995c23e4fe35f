#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

// Drives the installed command line binary end to end; the build passes the
// binary location through PIERICHAIN_CLI_PATH.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& arguments) {
  const std::string command =
      std::string(PIERICHAIN_CLI_PATH) + " " + arguments + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("dimension query emits the bare report") {
  const auto run = run_cli("dim --m 3 --r 1,1 --s 1,1 --level 1");
  CHECK(run.exit_code == 0);
  CHECK(run.output == "{\"dimension\":1}\n");
  const auto untruncated = run_cli("dim --m 3 --r 1,1 --s 1,1");
  CHECK(untruncated.exit_code == 0);
  CHECK(untruncated.output == "{\"dimension\":2}\n");
}

TEST_CASE("invalid arity is rejected") {
  CHECK(run_cli("dim --m 3 --r 1,1 --s 1").exit_code == 1);
  CHECK(run_cli("dim --m 3 --r 1,1").exit_code == 1);
  CHECK(run_cli("dim --m 1 --r 1,1 --s 1,1").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("help succeeds") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("dim --help").exit_code == 0);
}

TEST_CASE("tuple enumeration report") {
  const auto run = run_cli("gens --m 3 --a 2 --b 2 --set X");
  CHECK(run.exit_code == 0);
  const auto j = nlohmann::json::parse(run.output);
  CHECK(j["count"] == 6);
  CHECK(j["set"] == "X");
  CHECK(j["tuples"].size() == 6);
  CHECK(j["tuples"][0]["entries"] == "0,0,0");
  CHECK(j["tuples"][3]["entries"] == "2,1,2");
  CHECK(j["tuples"][3]["labels"][0] == "[2,1]");
  CHECK(j["tuples"][3]["weights"] == "r=1,1;s=1,1;K=1");
  const auto y = run_cli("gens --m 3 --a 2 --b 2 --set Y");
  CHECK(nlohmann::json::parse(y.output)["count"] == 5);
}

TEST_CASE("identical configuration gives byte-identical reports") {
  const std::string gens_args = "gens --m 3 --a 3 --b 2 --set X";
  CHECK(run_cli(gens_args).output == run_cli(gens_args).output);
  const std::string gorenstein_args = "gorenstein --m 2 --a 2 --b 2";
  CHECK(run_cli(gorenstein_args).output == run_cli(gorenstein_args).output);
}

TEST_CASE("tabular output for the tabular subcommands only") {
  const auto csv = run_cli("gens --m 2 --a 2 --b 2 --output csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("entries,labels,weights\n", 0) == 0);
  const auto hilbert = run_cli("hilbert --m 2 --a 2 --b 2 --level 1 --output csv");
  CHECK(hilbert.exit_code == 0);
  CHECK(hilbert.output == "level,count\n0,1\n1,8\n");
  CHECK(run_cli("dim --m 3 --r 1,1 --s 1,1 --output csv").exit_code == 1);
  CHECK(run_cli("markov --m 2 --a 2 --b 2 --output csv").exit_code == 1);
}

TEST_CASE("relations report matches the pinned pair") {
  const auto run = run_cli("relations --m 2 --a 2 --b 2 --set X");
  CHECK(run.exit_code == 0);
  const auto j = nlohmann::json::parse(run.output);
  REQUIRE(j["count"] == 2);
  CHECK(j["relations"][0]["text"] == "((0,0,0),(1,0,1))=((0,0,1),(1,0,0))");
  CHECK(j["relations"][1]["cut"] == 2);
}

TEST_CASE("decomposition report") {
  const auto run = run_cli("decompose --pattern top=3,3,1\\;bottom=3,2");
  CHECK(run.exit_code == 0);
  const auto j = nlohmann::json::parse(run.output);
  CHECK(j["total"] == 3);
  REQUIRE(j["generators"].size() == 3);
  CHECK(j["generators"][0]["label"] == "[2,1]");
  CHECK(j["generators"][0]["multiplicity"] == 1);
  CHECK(run_cli("decompose --pattern top=1,0\\;bottom=2").exit_code == 1);
}

TEST_CASE("extremal tuple report") {
  const auto run = run_cli("weyl --m 3 --a 3 --b 2 --I 1,2,3");
  CHECK(run.exit_code == 0);
  const auto j = nlohmann::json::parse(run.output);
  CHECK(j["tuple"] == "2,1,0,0");
  CHECK(j["kind"] == "I");
  CHECK(run_cli("weyl --m 3 --a 3 --b 2").exit_code == 1);
  CHECK(run_cli("weyl --m 3 --a 3 --b 2 --I 1,2,3 --J 1,2,3").exit_code == 1);
  CHECK(run_cli("weyl --m 3 --a 3 --b 2 --I 1,2").exit_code == 1);
}

TEST_CASE("connectivity and duality checks succeed on desk-scale shapes") {
  const auto markov = run_cli("markov --m 2 --a 2 --b 2 --max-degree 2");
  CHECK(markov.exit_code == 0);
  const auto j = nlohmann::json::parse(markov.output);
  CHECK(j["connected"] == true);
  CHECK(j["fibers"] == 42);
  CHECK(j["disconnected"] == 0);
  const auto gorenstein = run_cli("gorenstein --m 2 --a 2 --b 2");
  CHECK(gorenstein.exit_code == 0);
  const auto g = nlohmann::json::parse(gorenstein.output);
  CHECK(g["condition_holds"] == true);
  CHECK(g["witness_degree"] == 4);
  CHECK(g["sampled_interior_ok"] == true);
  const auto mismatch = run_cli("gorenstein --m 3 --a 3 --b 2");
  CHECK(mismatch.exit_code == 0);
  CHECK(nlohmann::json::parse(mismatch.output)["condition_holds"] == false);
}

TEST_CASE("size guard surfaces as invalid input") {
  CHECK(run_cli("gens --m 6 --a 5 --b 5 --max-objects 10").exit_code == 1);
}

TEST_CASE("text output stays human readable") {
  const auto run = run_cli("dim --m 3 --r 1,1 --s 1,1 --output text");
  CHECK(run.exit_code == 0);
  CHECK(run.output == "dimension: 2\n");
  const auto relations = run_cli("relations --m 2 --a 2 --b 2 --output text");
  CHECK(relations.exit_code == 0);
  CHECK(relations.output.find("((0,0,0),(1,0,1))=((0,0,1),(1,0,0))") != std::string::npos);
}
