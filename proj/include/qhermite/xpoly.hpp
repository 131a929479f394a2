#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qhermite/spoly.hpp"

namespace qh {

// Which substitution connects x to the Laurent variable:
//   cosine      x = cos(theta)  = (z + z^-1)/2 with z = e^{i theta}
//   hyperbolic  x = sinh(phi)   = (w - w^-1)/2 with w = e^{phi}
enum class VariableKind { cosine, hyperbolic };

// Polynomial in x with SPoly coefficients; the presentation basis for the
// polynomial families.
class XPoly {
 public:
  explicit XPoly(VariableKind kind = VariableKind::cosine) : kind_(kind) {}

  static XPoly constant(SPoly c, VariableKind kind = VariableKind::cosine);
  static XPoly monomial(SPoly c, int power,
                        VariableKind kind = VariableKind::cosine);

  VariableKind kind() const { return kind_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  SPoly coeff(int power) const;
  const std::vector<SPoly>& coeffs() const { return coeffs_; }
  void set_coeff(int power, SPoly value);

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  XPoly scaled(const SPoly& factor) const;
  bool operator==(const XPoly& rhs) const;
  bool operator!=(const XPoly& rhs) const { return !(*this == rhs); }

  double eval_double(double x, double s_value) const;
  std::complex<double> eval_complex(std::complex<double> x,
                                    double s_value) const;

  std::string str() const;

 private:
  void trim();
  std::vector<SPoly> coeffs_;  // index = power of x
  VariableKind kind_;
};

}  // namespace qh
