// Acceptance suite: runs every top-level criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "qhermite/families.hpp"
#include "qhermite/numerics.hpp"
#include "qhermite/operators.hpp"
#include "qhermite/verify.hpp"

using namespace qh;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void first_order_suite() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 0; n <= 30 && ok; ++n) {
    ZFun f = x_to_z(qhermite(n));
    ok = factorizing_op(f) == f.scaled(SPoly::s_power(-n));
  }
  double elapsed = seconds_since(start);
  ok = ok && elapsed < 10.0;
  std::ostringstream detail;
  detail << "n max 30, exact, " << elapsed << " s";
  report("first-order-eigenvalue", ok, detail.str());
}

void squared_suite() {
  bool ok = true;
  for (int n = 0; n <= 30 && ok; ++n) {
    ZFun f = x_to_z(qhermite(n));
    ok = factorizing_op(factorizing_op(f)) ==
         f.scaled(SPoly::s_power(-2 * n));
  }
  report("squared-operator", ok, "n max 30, exact");
}

void weightless_suite() {
  bool ok = true;
  for (int n = 0; n <= 20 && ok; ++n)
    ok = weightless_residual(x_to_z(qhermite(n)), n).is_zero();
  for (int n = 1; n <= 20 && ok; ++n)
    ok = !weightless_residual(x_to_z(qhermite(n)), n + 1).is_zero();
  report("weight-free-form", ok, "n max 20, exact + mutation");
}

void decomposition_suite() {
  bool ok = true;
  for (int k = 0; k <= 40 && ok; ++k)
    ok = decomposition_residual(k).is_zero();
  report("operator-decomposition", ok, "k max 40, exact");
}

void self_adjoint_suite() {
  bool ok = true;
  for (int n = 0; n <= 20 && ok; ++n)
    ok = self_adjoint_residual(n).part.is_zero();
  report("self-adjoint-form", ok, "n max 20, exact");
}

void dressed_first_order_suite() {
  bool ok = true;
  for (int n = 0; n <= 20 && ok; ++n) {
    Dressed d{x_to_z(qhermite(n)), 1};
    Dressed out = factorizing_op_dressed(d, true);
    ok = out.weight_exponent == 1 &&
         out.part == d.part.scaled(SPoly::s_power(-(n + 1)));
  }
  report("dressed-first-order", ok, "n max 20, exact");
}

void hyperbolic_suite() {
  bool ok = true;
  for (int n = 0; n <= 30 && ok; ++n) {
    ZFun f = x_to_z(qinv_hermite(n));
    ok = hyperbolic_factorizing_op(f) == f.scaled(SPoly::s_power(n));
  }
  report("hyperbolic-eigenvalue", ok, "n max 30, exact");
}

void genfun_suite() {
  bool ok = true;
  auto trig = rogers_genfun_coeffs(12);
  auto hyper = hyperbolic_genfun_coeffs(12);
  for (int n = 0; n <= 12 && ok; ++n)
    ok = trig[n] == x_to_z(qhermite(n)) &&
         hyper[n] == x_to_z(qinv_hermite(n));
  report("generating-function-oracles", ok, "n max 12, exact");
}

void product_rule_suite() {
  IdentityReport r = run_identity_suite("product-rule", 100);
  report("product-rule", r.verified, "100 random pairs, exact");
}

void orthogonality_suite() {
  auto start = std::chrono::steady_clock::now();
  QuadratureSpec spec;  // q = 1/2, 400 nodes
  auto gram = gram_matrix(8, spec);
  double max_offdiag = 0.0, max_diag_rel = 0.0;
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      if (m == n) {
        double expected =
            1.0 / qpoch_inf_numeric(std::pow(0.5, n + 1), 0.5, 1e-16);
        max_diag_rel = std::max(max_diag_rel,
                                std::abs(gram[n][n] - expected) / expected);
      } else {
        max_offdiag = std::max(max_offdiag, std::abs(gram[m][n]));
      }
    }
  }
  double elapsed = seconds_since(start);
  bool ok = max_offdiag < 1e-10 && max_diag_rel < 1e-9 && elapsed < 5.0;
  std::ostringstream detail;
  detail << "off-diag " << max_offdiag << ", diag rel " << max_diag_rel
         << ", " << elapsed << " s";
  report("orthogonality", ok, detail.str());
}

void limits_suite() {
  std::vector<Rational> qs;
  for (int k = 4; k <= 12; ++k) {
    BigInt den = BigInt(1) << k;
    qs.emplace_back(Rational(den - 1, den));
  }
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(-2.0 + 0.2 * i);

  bool ok = true;
  for (int n = 0; n <= 2 && ok; ++n) {
    auto r = classical_limit_check(n, qs, grid);
    for (double d : r.deviations)
      if (d != 0.0) ok = false;
  }
  for (int n = 3; n <= 5 && ok; ++n) {
    auto r = classical_limit_check(n, qs, grid);
    for (size_t i = 0; i + 1 < r.deviations.size() && ok; ++i) {
      double ratio = r.deviations[i + 1] / r.deviations[i];
      if (!(ratio > 0.4 && ratio < 0.6)) ok = false;
    }
  }
  report("classical-limit", ok, "zero for n <= 2, first order for n = 3..5");

  bool ok17 = true;
  {
    auto r = operator_limit_check(0, qs, grid);
    for (double d : r.deviations)
      if (d != 0.0) ok17 = false;
  }
  for (int m = 1; m <= 6 && ok17; ++m) {
    auto r = operator_limit_check(m, qs, grid);
    for (size_t i = 0; i + 1 < r.deviations.size() && ok17; ++i) {
      double ratio = r.deviations[i + 1] / r.deviations[i];
      if (!(ratio > 0.4 && ratio < 0.6)) ok17 = false;
    }
  }
  report("operator-limit", ok17, "monomials m <= 6, ratio in [0.4, 0.6]");
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  CliRun result;
  std::string command =
      std::string(QHERMITE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool has_schema(const std::string& output) {
  auto doc = nlohmann::json::parse(output, nullptr, false);
  if (doc.is_discarded()) return false;
  for (const char* field : {"command", "parameters", "status", "cases",
                            "max_error", "runtime_ms"})
    if (!doc.contains(field)) return false;
  return true;
}

void cli_suite() {
  bool ok = true;
  std::string detail;
  auto expect = [&](const std::string& args, int code, bool json) {
    if (!ok) return;
    CliRun r = run_cli(args);
    if (r.exit_code != code) {
      ok = false;
      detail = args + ": exit " + std::to_string(r.exit_code) +
               ", expected " + std::to_string(code);
      return;
    }
    if (json && !has_schema(r.output)) {
      ok = false;
      detail = args + ": schema violation";
    }
  };

  expect("verify --identity eq14 --max-n 10", 0, true);
  expect("verify --identity eq20 --max-n 10", 0, true);
  expect("verify --identity eq14 --max-n 2 --mutate", 1, true);
  expect("verify --identity nosuch --max-n 2", 2, false);
  expect("expand --family qhermite --n 2", 0, false);
  expect("expand --family qhermite --max-n 4 --format json", 0, true);
  expect("apply --op factorizing --family qhermite --n 3 --format json", 0,
         true);
  expect("table --family qinv --max-n 4 --format json", 0, true);
  expect("ortho --q 1/2 --max-n 3 --nodes 200", 0, true);
  expect("ortho --q 3/2 --max-n 3", 2, false);
  expect("ortho --q 0.5 --max-n 3", 2, false);
  expect("limit --which eq16 --n 2", 0, true);
  expect("limit --which eq17 --m 3", 0, true);
  expect("limit --which nosuch --n 2", 2, false);
  report("cli-contract", ok, detail.empty() ? "exit codes + schema" : detail);
}

}  // namespace

int main() {
  first_order_suite();
  squared_suite();
  weightless_suite();
  decomposition_suite();
  self_adjoint_suite();
  dressed_first_order_suite();
  hyperbolic_suite();
  genfun_suite();
  product_rule_suite();
  orthogonality_suite();
  limits_suite();
  cli_suite();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures;
}
