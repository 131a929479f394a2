// Command-line surface: expand polynomial families, apply the difference
// operators, run the identity verification suites, and emit coefficient
// tables, Gram matrices and limit reports as text, JSON or CSV.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhermite/families.hpp"
#include "qhermite/numerics.hpp"
#include "qhermite/operators.hpp"
#include "qhermite/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json make_envelope(const std::string& command, json parameters,
                   const std::string& status, long long cases,
                   double max_error, long long runtime_ms) {
  json doc;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["status"] = status;
  doc["cases"] = cases;
  doc["max_error"] = max_error;
  doc["runtime_ms"] = runtime_ms;
  return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Rational parse_q_or_die(const std::string& text) {
  auto q = parse_rational(text);
  if (!q)
    throw UsageError("q must be an exact rational like 1/2 (decimals are "
                     "not accepted; write 3/10 instead of 0.3)");
  if (!(*q > 0 && *q < 1)) throw UsageError("q must satisfy 0 < q < 1");
  return *q;
}

XPoly family_member(const std::string& family, int n) {
  if (family == "qhermite") return qhermite(n);
  if (family == "qinv") return qinv_hermite(n);
  if (family == "hermite") return classical_hermite(n);
  throw UsageError("unknown family '" + family +
                   "' (expected qhermite, qinv or hermite)");
}

bool uses_half_powers(const XPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.has_only_even_exponents()) return true;
  return false;
}

bool uses_half_powers(const ZFun& f) {
  for (const auto& [e, c] : f.terms())
    if (!c.has_only_even_exponents()) return true;
  return false;
}

const char* kHalfPowerLegend = "note: s denotes q^(1/2)";

// ---------------------------------------------------------------- expand --

int cmd_expand(const std::string& family, int n, int max_n,
               const std::string& format) {
  Timer timer;
  int lo = max_n >= 0 ? 0 : n;
  int hi = max_n >= 0 ? max_n : n;
  std::vector<XPoly> polys;
  for (int i = lo; i <= hi; ++i) polys.push_back(family_member(family, i));

  if (format == "json") {
    json list = json::array();
    for (int i = lo; i <= hi; ++i)
      list.push_back({{"n", i}, {"text", polys[i - lo].str()}});
    json doc = make_envelope(
        "expand",
        {{"family", family}, {"n", lo == hi ? json(lo) : json()}, {"max_n", max_n >= 0 ? json(max_n) : json()}, {"format", format}},
        "ok", hi - lo + 1, 0.0, timer.ms());
    doc["polynomials"] = std::move(list);
    emit(doc);
  } else {
    bool legend = false;
    for (int i = lo; i <= hi; ++i) {
      if (lo != hi) std::cout << i << ": ";
      std::cout << polys[i - lo].str() << "\n";
      legend = legend || uses_half_powers(polys[i - lo]);
    }
    if (legend) std::cout << kHalfPowerLegend << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- apply --

int cmd_apply(const std::string& op, const std::string& family, int n,
              const std::string& format) {
  Timer timer;
  XPoly p = family_member(family, n);
  ZFun input = x_to_z(p);
  ZFun output(input.kind());
  if (op == "averaging")
    output = averaging_op(input);
  else if (op == "divided-difference")
    output = divided_difference_op(input);
  else if (op == "factorizing")
    output = factorizing_op(input);
  else if (op == "factorizing-inv")
    output = factorizing_op(input, true);
  else if (op == "hyperbolic-factorizing")
    output = hyperbolic_factorizing_op(input);
  else
    throw UsageError("unknown operator '" + op + "'");

  // Report the eigenvalue when the output is an exact monomial multiple.
  std::string eigenvalue;
  if (!input.is_zero() && !output.is_zero()) {
    try {
      ZFun ratio_num = output;
      SPoly lead_in = input.terms().begin()->second;
      SPoly lead_out = output.coeff(input.terms().begin()->first);
      if (!lead_out.is_zero()) {
        SPoly lambda = exact_div(lead_out, lead_in);
        if (output - input.scaled(lambda) == ZFun(input.kind()))
          eigenvalue = lambda.str();
      }
    } catch (const NotDivisibleError&) {
    }
  }

  if (format == "json") {
    json doc = make_envelope(
        "apply",
        {{"op", op}, {"family", family}, {"n", n}, {"format", format}},
        "ok", 1, 0.0, timer.ms());
    doc["input"] = input.str();
    doc["output"] = output.str();
    doc["eigenvalue"] = eigenvalue.empty() ? json() : json(eigenvalue);
    emit(doc);
  } else {
    std::cout << "input:  " << input.str() << "\n";
    std::cout << "output: " << output.str() << "\n";
    if (!eigenvalue.empty()) std::cout << "eigenvalue: " << eigenvalue << "\n";
    if (uses_half_powers(input) || uses_half_powers(output))
      std::cout << kHalfPowerLegend << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify --

int cmd_verify(const std::string& identity, int max_n, bool mutate) {
  Timer timer;
  IdentityReport report = run_identity_suite(identity, max_n, mutate);
  if (!report.known) {
    std::string names;
    for (const auto& name : identity_names())
      names += (names.empty() ? "" : ", ") + name;
    throw UsageError("unknown identity '" + identity + "' (expected one of " +
                     names + ")");
  }

  json doc = make_envelope(
      "verify",
      {{"identity", identity}, {"max_n", max_n}, {"mutate", mutate}},
      report.verified ? "verified" : "failed",
      static_cast<long long>(report.cases.size()), 0.0, timer.ms());
  doc["identity"] = identity;
  if (report.first_failure) {
    doc["first_failure"] = {{"index", report.first_failure->input_n},
                            {"residual", report.first_failure->residual}};
  } else {
    doc["first_failure"] = nullptr;
  }
  emit(doc);
  return report.verified ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- table --

int cmd_table(const std::string& family, int max_n,
              const std::string& format) {
  Timer timer;
  std::vector<XPoly> polys;
  for (int i = 0; i <= max_n; ++i) polys.push_back(family_member(family, i));

  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i <= max_n; ++i)
      for (int k = 0; k <= polys[i].degree(); ++k)
        if (!polys[i].coeff(k).is_zero())
          rows.push_back(
              {{"n", i}, {"k", k}, {"coefficient", polys[i].coeff(k).str()}});
    json doc = make_envelope(
        "table", {{"family", family}, {"max_n", max_n}, {"format", format}},
        "ok", static_cast<long long>(rows.size()), 0.0, timer.ms());
    doc["rows"] = std::move(rows);
    emit(doc);
  } else if (format == "csv") {
    std::cout << "n,k,coefficient\r\n";
    for (int i = 0; i <= max_n; ++i)
      for (int k = 0; k <= polys[i].degree(); ++k)
        if (!polys[i].coeff(k).is_zero())
          std::cout << i << "," << k << ",\"" << polys[i].coeff(k).str()
                    << "\"\r\n";
  } else {
    for (int i = 0; i <= max_n; ++i)
      std::cout << i << ": " << polys[i].str() << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- ortho --

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

int cmd_ortho(const std::string& q_text, int max_n, int nodes, int truncation,
              double tol_offdiag, double tol_diag, const std::string& format) {
  Timer timer;
  QuadratureSpec spec;
  spec.q_value = parse_q_or_die(q_text);
  spec.node_count = nodes;
  spec.weight_truncation = truncation;
  if (max_n < 0) throw UsageError("--max-n must be >= 0");

  auto gram = gram_matrix(max_n, spec);
  double q = to_double(spec.q_value);
  double max_offdiag = 0.0, max_diag_rel = 0.0;
  for (int m = 0; m <= max_n; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      if (m == n) {
        double expected =
            1.0 / qpoch_inf_numeric(std::pow(q, n + 1), q, 1e-16);
        max_diag_rel = std::max(
            max_diag_rel, std::abs(gram[n][n] - expected) / expected);
      } else {
        max_offdiag = std::max(max_offdiag, std::abs(gram[m][n]));
      }
    }
  }
  bool ok = max_offdiag < tol_offdiag && max_diag_rel < tol_diag;
  int used_truncation = truncation > 0 ? truncation
                                       : default_weight_truncation(q);

  if (format == "csv") {
    std::cout << "# command=ortho q=" << q_text << " nodes=" << nodes
              << " truncation=" << used_truncation
              << " max_offdiag=" << format_double(max_offdiag)
              << " max_diag_rel_error=" << format_double(max_diag_rel)
              << "\r\n";
    std::cout << "m,n,value\r\n";
    for (int m = 0; m <= max_n; ++m)
      for (int n = 0; n <= max_n; ++n)
        std::cout << m << "," << n << "," << format_double(gram[m][n])
                  << "\r\n";
  } else if (format == "text") {
    std::cout << "Gram matrix, q = " << q_text << ", " << nodes
              << " nodes, truncation " << used_truncation << "\n";
    for (int m = 0; m <= max_n; ++m) {
      for (int n = 0; n <= max_n; ++n)
        std::cout << (n ? " " : "") << format_double(gram[m][n]);
      std::cout << "\n";
    }
    std::cout << "max off-diagonal:        " << format_double(max_offdiag)
              << "\n";
    std::cout << "max diagonal rel. error: " << format_double(max_diag_rel)
              << "\n";
  } else {
    json matrix = json::array();
    for (int m = 0; m <= max_n; ++m) {
      json row = json::array();
      for (int n = 0; n <= max_n; ++n) row.push_back(gram[m][n]);
      matrix.push_back(std::move(row));
    }
    json doc = make_envelope(
        "ortho",
        {{"q", q_text},
         {"max_n", max_n},
         {"nodes", nodes},
         {"truncation", used_truncation},
         {"tol_offdiag", tol_offdiag},
         {"tol_diag", tol_diag},
         {"format", format}},
        ok ? "verified" : "failed",
        static_cast<long long>((max_n + 1) * (max_n + 1)),
        std::max(max_offdiag, max_diag_rel), timer.ms());
    doc["max_offdiag"] = max_offdiag;
    doc["max_diag_rel_error"] = max_diag_rel;
    doc["matrix"] = std::move(matrix);
    emit(doc);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- limit --

int cmd_limit(const std::string& which, int n, int k_min, int k_max,
              const std::string& format) {
  Timer timer;
  if (n < 0) throw UsageError("the degree must be >= 0");
  if (k_min < 1 || k_max < k_min) throw UsageError("bad k range");

  std::vector<Rational> q_list;
  for (int k = k_min; k <= k_max; ++k) {
    BigInt den = BigInt(1) << k;
    q_list.emplace_back(Rational(den - 1, den));
  }
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(-2.0 + 0.2 * i);

  LimitReport report;
  if (which == "eq16")
    report = classical_limit_check(n, q_list, grid);
  else if (which == "eq17")
    report = operator_limit_check(n, q_list, grid);
  else
    throw UsageError("unknown limit check '" + which +
                     "' (expected eq16 or eq17)");

  bool all_zero = true, monotone = true;
  for (size_t i = 0; i < report.deviations.size(); ++i) {
    if (report.deviations[i] != 0.0) all_zero = false;
    if (i > 0 && report.deviations[i] > report.deviations[i - 1])
      monotone = false;
  }
  bool ok = all_zero || monotone;
  double max_dev = 0.0;
  for (double d : report.deviations) max_dev = std::max(max_dev, d);

  if (format == "csv") {
    std::cout << "k,q,deviation\r\n";
    for (size_t i = 0; i < q_list.size(); ++i)
      std::cout << (k_min + static_cast<int>(i)) << ","
                << rat_str(q_list[i]) << ","
                << format_double(report.deviations[i]) << "\r\n";
  } else if (format == "text") {
    std::cout << which << " deviations for degree " << n << ":\n";
    for (size_t i = 0; i < q_list.size(); ++i)
      std::cout << "  q = " << rat_str(q_list[i]) << ": "
                << format_double(report.deviations[i]) << "\n";
    std::cout << (ok ? "monotone" : "NOT monotone") << "\n";
  } else {
    json devs = json::array();
    for (size_t i = 0; i < q_list.size(); ++i)
      devs.push_back({{"k", k_min + static_cast<int>(i)},
                      {"q", rat_str(q_list[i])},
                      {"deviation", report.deviations[i]}});
    json doc = make_envelope(
        "limit",
        {{"which", which},
         {"n", n},
         {"k_min", k_min},
         {"k_max", k_max},
         {"format", format}},
        ok ? "verified" : "failed",
        static_cast<long long>(report.deviations.size()), max_dev,
        timer.ms());
    doc["deviations"] = std::move(devs);
    emit(doc);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact q-difference operator kernel for the continuous q-Hermite "
      "polynomial families, with numeric orthogonality and limit checks"};
  app.require_subcommand(1);

  std::string family = "qhermite", op, identity, which, q_text = "1/2";
  std::string format;
  int n = 0, max_n = -1, nodes = 400, truncation = 0;
  int k_min = 4, k_max = 12;
  double tol_offdiag = 1e-10, tol_diag = 1e-9;
  bool mutate = false;

  auto* expand = app.add_subcommand("expand", "Print family members");
  expand->add_option("--family", family, "qhermite, qinv or hermite");
  expand->add_option("--n", n, "single degree");
  expand->add_option("--max-n", max_n, "print degrees 0..max-n");
  expand->add_option("--format", format, "text or json");

  auto* apply = app.add_subcommand("apply", "Apply a difference operator");
  apply->add_option("--op", op,
                    "averaging, divided-difference, factorizing, "
                    "factorizing-inv or hyperbolic-factorizing")
      ->required();
  apply->add_option("--family", family, "qhermite, qinv or hermite");
  apply->add_option("--n", n, "degree");
  apply->add_option("--format", format, "text or json");

  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("--identity", identity, "suite tag")->required();
  verify->add_option("--max-n", max_n, "largest degree / case count");
  verify->add_flag("--mutate", mutate)->group("");  // test hook, hidden

  auto* table = app.add_subcommand("table", "Coefficient table");
  table->add_option("--family", family, "qhermite, qinv or hermite");
  table->add_option("--max-n", max_n, "degrees 0..max-n")->required();
  table->add_option("--format", format, "text, json or csv");

  auto* ortho = app.add_subcommand("ortho", "Numeric Gram matrix");
  ortho->add_option("--q", q_text, "exact rational in (0,1), e.g. 1/2")
      ->required();
  ortho->add_option("--max-n", max_n, "largest degree")->required();
  ortho->add_option("--nodes", nodes, "quadrature nodes");
  ortho->add_option("--truncation", truncation, "weight product truncation");
  ortho->add_option("--tol-offdiag", tol_offdiag, "off-diagonal tolerance");
  ortho->add_option("--tol-diag", tol_diag, "diagonal relative tolerance");
  ortho->add_option("--format", format, "text, json or csv");

  auto* limit = app.add_subcommand("limit", "Classical-limit deviations");
  limit->add_option("--which", which, "eq16 or eq17")->required();
  limit->add_option("--n", n, "degree (eq16) / monomial power (eq17)");
  limit->add_option("--m", n, "alias for --n");
  limit->add_option("--k-min", k_min, "first k in q = 1 - 2^-k");
  limit->add_option("--k-max", k_max, "last k in q = 1 - 2^-k");
  limit->add_option("--format", format, "text, json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (expand->parsed()) {
      if (format.empty()) format = "text";
      if (max_n < 0 && !expand->count("--n") && !expand->count("--max-n"))
        throw UsageError("give --n or --max-n");
      return cmd_expand(family, n, max_n, format);
    }
    if (apply->parsed()) {
      if (format.empty()) format = "text";
      if (op == "hyperbolic-factorizing" && family != "qinv")
        throw UsageError("hyperbolic-factorizing expects --family qinv");
      if (op != "hyperbolic-factorizing" && family == "qinv")
        throw UsageError("--family qinv pairs with hyperbolic-factorizing");
      return cmd_apply(op, family, n, format);
    }
    if (verify->parsed()) {
      if (max_n < 0) max_n = identity == "product-rule" ? 100 : 12;
      return cmd_verify(identity, max_n, mutate);
    }
    if (table->parsed()) {
      if (format.empty()) format = "csv";
      if (max_n < 0) throw UsageError("--max-n must be >= 0");
      return cmd_table(family, max_n, format);
    }
    if (ortho->parsed()) {
      if (format.empty()) format = "json";
      return cmd_ortho(q_text, max_n, nodes, truncation, tol_offdiag,
                       tol_diag, format);
    }
    if (limit->parsed()) {
      if (format.empty()) format = "json";
      return cmd_limit(which, n, k_min, k_max, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
