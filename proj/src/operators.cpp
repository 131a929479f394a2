#include "qhermite/operators.hpp"

#include <cassert>

#include "qhermite/families.hpp"

namespace qh {

namespace {

const SPoly kHalf{Rational(1, 2)};

}  // namespace

ZFun averaging_op(const ZFun& f) {
  return (scale_substitute(f, 1) + scale_substitute(f, -1)).scaled(kHalf);
}

ZFun divided_difference_op(const ZFun& f) {
  ZFun num = scale_substitute(f, 1) - scale_substitute(f, -1);
  ZFun zq = exact_div_binomial(num, BinomialSign::minus);
  // Remaining scalar divisor (s - s^-1)/2, applied per coefficient.
  SPoly s_binomial = SPoly::s_power(1) - SPoly::s_power(-1);
  ZFun result(f.kind());
  for (const auto& [e, c] : zq.terms()) {
    SPoly doubled = c + c;
    result.set_coeff(e, exact_div(doubled, s_binomial));
  }
  return result;
}

ZFun factorizing_op(const ZFun& f, bool inverted) {
  int dir = inverted ? 1 : -1;
  ZFun num = scale_substitute(f, dir).shifted(1) -
             scale_substitute(f, -dir).shifted(-1);
  return exact_div_binomial(num, BinomialSign::minus);
}

Dressed factorizing_op_dressed(const Dressed& d, bool inverted) {
  int dir = inverted ? 1 : -1;
  ZFun num = dressed_shift(d, dir).part.shifted(1) -
             dressed_shift(d, -dir).part.shifted(-1);
  return Dressed{exact_div_binomial(num, BinomialSign::minus),
                 d.weight_exponent};
}

ZFun hyperbolic_factorizing_op(const ZFun& f) {
  assert(f.kind() == VariableKind::hyperbolic);
  ZFun num = scale_substitute(f, 1).shifted(1) +
             scale_substitute(f, -1).shifted(-1);
  return exact_div_binomial(num, BinomialSign::plus);
}

ZFun weightless_residual(const ZFun& f, int n) {
  ZFun full_up = scale_substitute(f, 2);    // f(qz)
  ZFun full_down = scale_substitute(f, -2); // f(z/q)

  SPoly q = SPoly::q_power(1);
  ZFun one = ZFun::constant(SPoly::one(), f.kind());
  ZFun qz2 = ZFun::monomial(q, 2, f.kind());
  ZFun qzm2 = ZFun::monomial(q, -2, f.kind());

  ZFun lhs = (one - qz2) * (full_down - f);
  lhs = lhs.shifted(1);
  ZFun lhs2 = (one - qzm2) * (f - full_up);
  lhs += lhs2.shifted(-1);

  SPoly eigen = SPoly::q_power(-n) - SPoly::one();
  ZFun z_binom = ZFun::monomial(SPoly::one(), 1, f.kind()) -
                 ZFun::monomial(SPoly::one(), -1, f.kind());
  ZFun rhs = (z_binom * (one - qzm2) * (one - qz2) * f).scaled(eigen);
  return lhs - rhs;
}

Dressed self_adjoint_residual(int n, int eigen_index) {
  assert(n >= 0);
  if (eigen_index < 0) eigen_index = n;
  ZFun hn = x_to_z(qhermite(n));
  Dressed inner{divided_difference_op(hn), 1};
  ZFun lhs = dressed_shift(inner, 1).part - dressed_shift(inner, -1).part;

  // (4q(1-q^-n)/(1-q)^2) * delta_q x = 2 s^{1-2n} [n]_q (z - z^-1): the
  // (1-q) denominators cancel symbolically before any division happens.
  SPoly scalar =
      (SPoly::q_integer(eigen_index) + SPoly::q_integer(eigen_index))
          .shifted(1 - 2 * eigen_index);
  ZFun z_binom = ZFun::monomial(SPoly::one(), 1) -
                 ZFun::monomial(SPoly::one(), -1);
  ZFun rhs = (z_binom * hn).scaled(scalar);
  return Dressed{lhs - rhs, 1};
}

ZFun decomposition_residual(int k) {
  assert(k >= 0);
  ZFun basis = ZFun::monomial(SPoly::one(), k);
  basis += ZFun::monomial(SPoly::one(), -k);

  ZFun lhs = factorizing_op(basis);
  // (1-q)/(2 sqrt q) = (s^-1 - s)/2
  SPoly scalar = (SPoly::s_power(-1) - SPoly::s_power(1)) * kHalf;
  ZFun x_image = ZFun::monomial(kHalf, 1) + ZFun::monomial(kHalf, -1);
  ZFun rhs = averaging_op(basis) +
             (x_image * divided_difference_op(basis)).scaled(scalar);
  return lhs - rhs;
}

}  // namespace qh
