#pragma once

#include <vector>

#include "qhermite/xpoly.hpp"

namespace qh {

// Quadrature setup for inner products against the orthogonality weight.
// The integral runs over theta in [0, pi]; q enters as an exact rational and
// is specialized to double once, so the symbolic and numeric layers agree on
// its value. weight_truncation 0 asks for the default (smallest K with
// q^K/(1-q) < 1e-14).
struct QuadratureSpec {
  int node_count = 400;
  Rational q_value{1, 2};
  int weight_truncation = 0;
};

struct QPochInfo {
  double value = 1.0;
  double tail_bound = 0.0;
  int factors = 0;
};

// (base; q)_inf = prod_{k>=0} (1 - base q^k), truncated once the remaining
// tail bound sum_{j>=K} |base| q^j falls below tol. Throws std::domain_error
// for |q| >= 1.
double qpoch_inf_numeric(double base, double q, double tol,
                         QPochInfo* info = nullptr);

int default_weight_truncation(double q);

// Orthogonality weight at x = cos(theta):
//   (1/sin theta) * prod_{k=0}^{K-1} (1 - 2 cos(2 theta) q^k + q^{2k}),
// the real pairing of the conjugate factors. Throws std::domain_error at
// theta in {0, pi}.
double eval_weight(double theta, double q, int truncation);

// (1/2pi) Integral_{-1}^{1} f g w dx, computed in theta where the integrand
// f(cos t) g(cos t) (w sin t) is smooth; Gauss-Legendre on [0, pi].
double inner_product(const XPoly& f, const XPoly& g, const QuadratureSpec& spec);

// Gram matrix of the q-Hermite family: entry (m, n) = <H_m, H_n>.
std::vector<std::vector<double>> gram_matrix(int max_n,
                                             const QuadratureSpec& spec);

struct LimitReport {
  int n = 0;
  std::vector<Rational> q_sequence;
  std::vector<double> deviations;
};

// Deviation of the kappa-rescaled q-Hermite polynomial from the classical
// Hermite polynomial, max over the sample grid, one entry per q. Only
// kappa^2 = (1-q)/2 enters (even/odd split), so each coefficient is an
// exact rational before the final float evaluation.
LimitReport classical_limit_check(int n, const std::vector<Rational>& q_list,
                                  const std::vector<double>& grid);

// Deviation of (1/(1-q)) (D_kappa - I) x^m from its differential limit
// (m x^m - m(m-1) x^{m-2}/2) / 2, with D the factorizing operator applied in
// the rescaled variable. The operator image is computed exactly in the
// s-ring and specialized through s = sqrt(q) per grid evaluation.
LimitReport operator_limit_check(int m, const std::vector<Rational>& q_list,
                                 const std::vector<double>& grid);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

}  // namespace qh
