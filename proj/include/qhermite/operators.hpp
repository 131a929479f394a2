#pragma once

#include <string>

#include "qhermite/zfun.hpp"

namespace qh {

// The difference operators act through the two half-shift substitutions
// z -> s z and z -> z/s; everything below is exact Laurent arithmetic.

// Averaging operator: (f(sz) + f(z/s)) / 2. Linear, fixes constants.
ZFun averaging_op(const ZFun& f);

// Askey-Wilson divided-difference operator:
//   (f(sz) - f(z/s)) / ((s - s^-1)(z - z^-1)/2).
// Lowers the x-degree by one and annihilates constants. Asymmetric input
// surfaces as NotDivisibleError from one of the two exact divisions.
ZFun divided_difference_op(const ZFun& f);

// The first-order factorizing operator
//   [z f(z/s) - z^-1 f(sz)] / (z - z^-1),
// whose square minus the identity reproduces the classical second-order
// operator on the q-Hermite family. inverted = true replaces s by s^-1
// throughout (the 1/q variant used on weight-dressed functions).
ZFun factorizing_op(const ZFun& f, bool inverted = false);

// Same operator on a dressed element; shifts of the weight factor are
// rewritten by dressed_shift, the weight exponent is preserved.
Dressed factorizing_op_dressed(const Dressed& d, bool inverted = false);

// Hyperbolic analogue [w f(sw) + w^-1 f(w/s)] / (w + w^-1) acting on
// hyperbolic-kind functions. Fixes constants.
ZFun hyperbolic_factorizing_op(const ZFun& f);

// Residual of the weight-free second-order equation, cleared of its
// rational-function prefactors: both sides are multiplied by
// (z - z^-1)(1 - q z^-2)(1 - q z^2) so the check is polynomial. Returns
//   z(1 - q z^2)(f(z/q) - f) + z^-1(1 - q z^-2)(f - f(qz))
//     - (q^-n - 1)(z - z^-1)(1 - q z^-2)(1 - q z^2) f,
// which vanishes iff f solves the equation with eigenvalue q^-n - 1.
ZFun weightless_residual(const ZFun& f, int n);

// Residual of the self-adjoint second-order form for the degree-n family
// member, with one difference layer left on the outside:
//   delta_q[ weight * Dq H_n ] - c_n * H_n * weight,
// where c_n = (4q(1-q^-n)/(1-q)^2) * delta_q x collapses to the exact
// Laurent element 2 s^{1-2n} [n]_q (z - z^-1). eigen_index overrides n in
// c_n (mutation hook for tests); -1 means use n.
Dressed self_adjoint_residual(int n, int eigen_index = -1);

// Residual of the operator decomposition
//   factorizing = averaging + ((1-q)/(2 sqrt q)) * x * divided-difference
// applied to the basis element z^k + z^-k.
ZFun decomposition_residual(int k);

// Outcome of one verification application.
struct OpReport {
  std::string name;
  int input_n = 0;
  std::string residual;
  bool verified = false;
};

}  // namespace qh
