#include "qhermite/numerics.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qhermite/families.hpp"
#include "qhermite/operators.hpp"
#include "qhermite/zfun.hpp"

namespace qh {

double qpoch_inf_numeric(double base, double q, double tol, QPochInfo* info) {
  if (!(std::abs(q) < 1.0))
    throw std::domain_error("qpoch_inf_numeric: |q| must be < 1");
  assert(tol > 0);
  QPochInfo local;
  if (base != 0.0) {
    double aq = std::abs(q);
    double term = std::abs(base);
    // Tail of sum_k |base| q^k controls the log of the remaining product.
    while (term / (1.0 - aq) >= tol) {
      local.value *= 1.0 - base * std::pow(q, local.factors);
      ++local.factors;
      term *= aq;
    }
    local.tail_bound = term / (1.0 - aq);
  }
  if (info) *info = local;
  return local.value;
}

int default_weight_truncation(double q) {
  int k = 1;
  while (std::pow(q, k) / (1.0 - q) >= 1e-14) ++k;
  return k;
}

double eval_weight(double theta, double q, int truncation) {
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw std::domain_error("eval_weight: theta must lie strictly in (0, pi)");
  double c = 2.0 * std::cos(2.0 * theta);
  double product = 1.0;
  double qk = 1.0;
  for (int k = 0; k < truncation; ++k) {
    product *= 1.0 - c * qk + qk * qk;
    qk *= q;
  }
  return product / std::sin(theta);
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  assert(n >= 2);
  // Newton iteration on P_n with the usual Chebyshev-based initial guesses.
  std::vector<std::pair<double, double>> rule(n);
  const double pi = std::numbers::pi;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule[i] = {-x, w};
    rule[n - 1 - i] = {x, w};
  }
  return rule;
}

namespace {

struct ThetaRule {
  std::vector<double> theta;
  std::vector<double> weight;  // quadrature weight times (w sin t)/(2 pi)
};

ThetaRule weighted_theta_rule(const QuadratureSpec& spec) {
  assert(spec.node_count >= 2);
  double q = to_double(spec.q_value);
  assert(q > 0.0 && q < 1.0);
  int truncation = spec.weight_truncation > 0 ? spec.weight_truncation
                                              : default_weight_truncation(q);
  const double pi = std::numbers::pi;
  auto base = gauss_legendre(spec.node_count);
  ThetaRule rule;
  rule.theta.reserve(base.size());
  rule.weight.reserve(base.size());
  for (auto [x, w] : base) {
    double t = 0.5 * pi * (x + 1.0);
    double scaled = 0.5 * pi * w;
    rule.theta.push_back(t);
    rule.weight.push_back(scaled * eval_weight(t, q, truncation) *
                          std::sin(t) / (2.0 * pi));
  }
  return rule;
}

}  // namespace

double inner_product(const XPoly& f, const XPoly& g,
                     const QuadratureSpec& spec) {
  ThetaRule rule = weighted_theta_rule(spec);
  double s = std::sqrt(to_double(spec.q_value));
  double sum = 0.0;
  for (size_t i = 0; i < rule.theta.size(); ++i) {
    double x = std::cos(rule.theta[i]);
    sum += rule.weight[i] * f.eval_double(x, s) * g.eval_double(x, s);
  }
  return sum;
}

std::vector<std::vector<double>> gram_matrix(int max_n,
                                             const QuadratureSpec& spec) {
  assert(max_n >= 0);
  ThetaRule rule = weighted_theta_rule(spec);
  size_t nodes = rule.theta.size();

  // Family values per node via the recurrence, in doubles.
  double qd = to_double(spec.q_value);
  std::vector<std::vector<double>> values(max_n + 1,
                                          std::vector<double>(nodes));
  std::vector<double> x(nodes);
  for (size_t i = 0; i < nodes; ++i) x[i] = std::cos(rule.theta[i]);
  for (int n = 0; n <= max_n; ++n) {
    for (size_t i = 0; i < nodes; ++i) {
      if (n == 0)
        values[n][i] = 1.0;
      else if (n == 1)
        values[n][i] = 2.0 * x[i];
      else
        values[n][i] = 2.0 * x[i] * values[n - 1][i] -
                       (1.0 - std::pow(qd, n - 1)) * values[n - 2][i];
    }
  }

  std::vector<std::vector<double>> gram(max_n + 1,
                                        std::vector<double>(max_n + 1));
  for (int m = 0; m <= max_n; ++m) {
    for (int n = m; n <= max_n; ++n) {
      double sum = 0.0;
      for (size_t i = 0; i < nodes; ++i)
        sum += rule.weight[i] * values[m][i] * values[n][i];
      gram[m][n] = gram[n][m] = sum;
    }
  }
  return gram;
}

LimitReport classical_limit_check(int n, const std::vector<Rational>& q_list,
                                  const std::vector<double>& grid) {
  assert(n >= 0);
  LimitReport report;
  report.n = n;
  report.q_sequence = q_list;
  XPoly qpoly = qhermite(n);
  XPoly classical = classical_hermite(n);
  for (const Rational& q : q_list) {
    assert(q > 0 && q < 1);
    // kappa^{-n} H_n(kappa x | q): coefficient of x^k picks up
    // (2/(1-q))^{(n-k)/2}; n - k is even throughout the family.
    Rational inv_kappa2 = Rational(2) / (Rational(1) - q);
    std::vector<double> dev_coeffs(n + 1, 0.0);
    for (int k = n; k >= 0; k -= 2) {
      Rational c = qpoly.coeff(k).eval_q(q);
      Rational scale(1);
      for (int i = 0; i < (n - k) / 2; ++i) scale *= inv_kappa2;
      Rational rescaled = c * scale - classical.coeff(k).rational_value();
      dev_coeffs[k] = to_double(rescaled);
    }
    double worst = 0.0;
    for (double x : grid) {
      double v = 0.0;
      for (int k = n; k >= 0; --k) v = v * x + dev_coeffs[k];
      worst = std::max(worst, std::abs(v));
    }
    report.deviations.push_back(worst);
  }
  return report;
}

namespace {

// Even/odd split in s: p = even(q) + s * odd(q), both exact in q.
struct SParity {
  SPoly even, odd;
};

SParity split_s_parity(const SPoly& p) {
  SParity parts;
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 == 0)
      parts.even += SPoly::monomial(c, e);
    else
      parts.odd += SPoly::monomial(c, e - 1);
  }
  return parts;
}

}  // namespace

LimitReport operator_limit_check(int m, const std::vector<Rational>& q_list,
                                 const std::vector<double>& grid) {
  assert(m >= 0);
  LimitReport report;
  report.n = m;
  report.q_sequence = q_list;

  // Exact operator image of x^m, computed once in the s-ring.
  XPoly monomial = XPoly::monomial(SPoly::one(), m);
  XPoly image = z_to_x(factorizing_op(x_to_z(monomial)));

  for (const Rational& q : q_list) {
    assert(q > 0 && q < 1);
    double s = std::sqrt(to_double(q));
    Rational inv_kappa2 = Rational(2) / (Rational(1) - q);

    // Rescaled difference quotient (kappa^{-m} image(kappa x) - x^m)/(1-q).
    // The kappa powers and the 1/(1-q) amplify like (1-q)^{-(m-k)/2-1}, so
    // each coefficient is evaluated in exact rational arithmetic per s-parity
    // piece; sqrt(q) touches the result exactly once.
    std::vector<double> lhs_coeffs(m + 1, 0.0);
    for (int k = m; k >= 0; k -= 2) {
      SPoly numerator = image.coeff(k);
      if (k == m) numerator -= SPoly::one();
      SParity parts = split_s_parity(numerator);
      Rational scale = Rational(1) / (Rational(1) - q);
      for (int i = 0; i < (m - k) / 2; ++i) scale *= inv_kappa2;
      lhs_coeffs[k] = to_double(parts.even.eval_q(q) * scale) +
                      s * to_double(parts.odd.eval_q(q) * scale);
    }

    double worst = 0.0;
    for (double x : grid) {
      double lhs = 0.0;
      for (int k = m; k >= 0; --k) lhs = lhs * x + lhs_coeffs[k];
      double rhs = 0.5 * m * std::pow(x, m);
      if (m >= 2) rhs -= 0.25 * m * (m - 1) * std::pow(x, m - 2);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    report.deviations.push_back(worst);
  }
  return report;
}

}  // namespace qh
