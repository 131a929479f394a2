#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qhermite/xpoly.hpp"

namespace qh {

class NotSymmetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Laurent polynomial in the circle variable z = e^{i theta} (cosine kind) or
// the hyperbolic variable w = e^{phi} (hyperbolic kind), with SPoly
// coefficients. Images of x-polynomials satisfy the kind's symmetry:
//   cosine      f(z) = f(z^-1)       i.e. c_k = c_{-k}
//   hyperbolic  f(w) = f(-w^-1)      i.e. c_k = (-1)^k c_{-k}
class ZFun {
 public:
  explicit ZFun(VariableKind kind = VariableKind::cosine) : kind_(kind) {}

  static ZFun constant(SPoly c, VariableKind kind = VariableKind::cosine);
  static ZFun monomial(SPoly c, int exp,
                       VariableKind kind = VariableKind::cosine);

  VariableKind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, SPoly>& terms() const { return terms_; }
  SPoly coeff(int exp) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero
  bool is_symmetric() const;

  ZFun operator-() const;
  ZFun& operator+=(const ZFun& rhs);
  ZFun& operator-=(const ZFun& rhs);
  friend ZFun operator+(ZFun a, const ZFun& b) { return a += b; }
  friend ZFun operator-(ZFun a, const ZFun& b) { return a -= b; }
  friend ZFun operator*(const ZFun& a, const ZFun& b);
  ZFun scaled(const SPoly& factor) const;
  // Multiply by z^k.
  ZFun shifted(int k) const;
  bool operator==(const ZFun& rhs) const;
  bool operator!=(const ZFun& rhs) const { return !(*this == rhs); }

  std::string str() const;  // variable letter picked by kind

  void set_coeff(int exp, SPoly value);

 private:
  std::map<int, SPoly> terms_;
  VariableKind kind_;
};

// z -> s^k z: the coefficient of z^m picks up s^{k m}. Realizes the
// half-shifts of the difference operators; k = ±2 is the full shift.
ZFun scale_substitute(const ZFun& f, int k);

enum class BinomialSign { minus, plus };

// Exact division by z - z^-1 (minus) or z + z^-1 (plus). Throws
// NotDivisibleError with the remainder attached; in practice that signals an
// input that lost its symmetry.
ZFun exact_div_binomial(const ZFun& f, BinomialSign sign);

// Substitute x = (z + z^-1)/2 (cosine) or x = (w - w^-1)/2 (hyperbolic).
ZFun x_to_z(const XPoly& p);

// Exact inverse of x_to_z; throws NotSymmetricError when the input does not
// satisfy its kind's symmetry.
XPoly z_to_x(const ZFun& f);

// f(x) * weight(x)^k for k in {0, 1}. The weight itself is never expanded;
// shifts rewrite it through its one-step functional equation, so weight^1
// elements stay inside the Laurent ring.
struct Dressed {
  ZFun part;
  int weight_exponent = 0;

  bool operator==(const Dressed& rhs) const {
    return weight_exponent == rhs.weight_exponent && part == rhs.part;
  }
};

// The half-shift z -> s^k z (k = +1 or -1) applied to a dressed element.
// On weight^0 this is scale_substitute. On weight^1 the shifted weight is
// rewritten in place: the shift z -> sz contributes the factor -z^-2/s and
// z -> z/s contributes -z^2/s, which makes the two directions inverse to
// each other.
Dressed dressed_shift(const Dressed& d, int k);

}  // namespace qh
