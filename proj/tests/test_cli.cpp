#include <doctest.h>

#include <array>
#include <cstdio>
#include <regex>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef QHERMITE_CLI_PATH
#error "QHERMITE_CLI_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(QHERMITE_CLI_PATH) + " " + args +
                        " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string strip_runtime(std::string text) {
  static const std::regex pattern("\"runtime_ms\": [0-9]+");
  return std::regex_replace(text, pattern, "\"runtime_ms\": 0");
}

void check_schema(const std::string& output) {
  auto doc = nlohmann::json::parse(output);
  for (const char* field :
       {"command", "parameters", "status", "cases", "max_error",
        "runtime_ms"})
    CHECK(doc.contains(field));
}

}  // namespace

TEST_CASE("cli expand") {
  auto r = run_cli("expand --family qhermite --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4*x^2 + (-1 + q)\n");

  r = run_cli("expand --family qinv --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2*x\n");

  r = run_cli("expand --family hermite --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "8*x^3 - 12*x\n");

  r = run_cli("expand --family nosuch --n 1");
  CHECK(r.exit_code == 2);

  r = run_cli("expand --family qhermite --max-n 3 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.output);
}

TEST_CASE("cli apply") {
  auto r = run_cli("apply --op factorizing --family qhermite --n 2 "
                   "--format json");
  CHECK(r.exit_code == 0);
  check_schema(r.output);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["eigenvalue"] == "q^-1");

  // odd degree: the eigenvalue needs a half power of q and renders in s
  r = run_cli("apply --op factorizing --family qhermite --n 3 --format json");
  CHECK(r.exit_code == 0);
  doc = nlohmann::json::parse(r.output);
  CHECK(doc["eigenvalue"] == "s^-3");

  r = run_cli("apply --op hyperbolic-factorizing --family qinv --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("eigenvalue: q") != std::string::npos);

  r = run_cli("apply --op nosuch --family qhermite --n 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli verify exit codes and schema") {
  auto r = run_cli("verify --identity eq14 --max-n 8");
  CHECK(r.exit_code == 0);
  check_schema(r.output);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["status"] == "verified");
  CHECK(doc["cases"] == 9);
  CHECK(doc["first_failure"].is_null());

  r = run_cli("verify --identity eq14 --max-n 2 --mutate");
  CHECK(r.exit_code == 1);
  doc = nlohmann::json::parse(r.output);
  CHECK(doc["status"] == "failed");
  CHECK_FALSE(doc["first_failure"].is_null());

  r = run_cli("verify --identity nosuch --max-n 2");
  CHECK(r.exit_code == 2);

  for (const char* identity : {"eq3", "eq7", "eq8", "eq12", "eq15", "eq18",
                               "eq20", "genfun-h"}) {
    r = run_cli(std::string("verify --identity ") + identity + " --max-n 4");
    CHECK(r.exit_code == 0);
    check_schema(r.output);
  }
  r = run_cli("verify --identity product-rule --max-n 10");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli ortho") {
  auto r = run_cli("ortho --q 1/2 --max-n 3 --nodes 200");
  CHECK(r.exit_code == 0);
  check_schema(r.output);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["status"] == "verified");
  CHECK(doc["max_offdiag"].get<double>() < 1e-10);

  r = run_cli("ortho --q 1/2 --max-n 0 --nodes 200");
  CHECK(r.exit_code == 0);
  doc = nlohmann::json::parse(r.output);
  double entry = doc["matrix"][0][0].get<double>();
  CHECK(entry == doctest::Approx(3.462746619).epsilon(1e-9));

  r = run_cli("ortho --q 3/2 --max-n 2");
  CHECK(r.exit_code == 2);

  r = run_cli("ortho --q 0.5 --max-n 2");
  CHECK(r.exit_code == 2);

  r = run_cli("ortho --q 1/2 --max-n 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("m,n,value\r\n") != std::string::npos);
}

TEST_CASE("cli limit") {
  auto r = run_cli("limit --which eq16 --n 2");
  CHECK(r.exit_code == 0);
  check_schema(r.output);
  auto doc = nlohmann::json::parse(r.output);
  for (const auto& row : doc["deviations"])
    CHECK(row["deviation"].get<double>() == 0.0);

  r = run_cli("limit --which eq16 --n 3");
  CHECK(r.exit_code == 0);
  doc = nlohmann::json::parse(r.output);
  auto rows = doc["deviations"];
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    double ratio = rows[i + 1]["deviation"].get<double>() /
                   rows[i]["deviation"].get<double>();
    CHECK(ratio == doctest::Approx(0.5).epsilon(0.05));
  }

  r = run_cli("limit --which eq17 --m 0");
  CHECK(r.exit_code == 0);
  doc = nlohmann::json::parse(r.output);
  for (const auto& row : doc["deviations"])
    CHECK(row["deviation"].get<double>() == 0.0);

  r = run_cli("limit --which nosuch --n 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli output is deterministic") {
  for (const char* args :
       {"expand --family qhermite --max-n 6 --format json",
        "verify --identity eq14 --max-n 6",
        "ortho --q 1/2 --max-n 3 --nodes 200",
        "limit --which eq16 --n 4",
        "table --family qinv --max-n 5 --format csv"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(strip_runtime(a.output) == strip_runtime(b.output));
  }
}

TEST_CASE("cli table") {
  auto r = run_cli("table --family qhermite --max-n 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n,k,coefficient\r\n") == 0);
  CHECK(r.output.find("2,0,\"-1 + q\"") != std::string::npos);

  r = run_cli("table --family qhermite --max-n 2 --format json");
  CHECK(r.exit_code == 0);
  check_schema(r.output);
}

TEST_CASE("cli rejects missing subcommand") {
  auto r = run_cli("");
  CHECK(r.exit_code == 2);
}
