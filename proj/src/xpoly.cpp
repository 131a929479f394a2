#include "qhermite/xpoly.hpp"

#include <cassert>
#include <sstream>

namespace qh {

XPoly XPoly::constant(SPoly c, VariableKind kind) {
  return monomial(std::move(c), 0, kind);
}

XPoly XPoly::monomial(SPoly c, int power, VariableKind kind) {
  assert(power >= 0);
  XPoly p(kind);
  if (!c.is_zero()) {
    p.coeffs_.resize(power + 1);
    p.coeffs_[power] = std::move(c);
  }
  return p;
}

SPoly XPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return SPoly();
  return coeffs_[power];
}

void XPoly::set_coeff(int power, SPoly value) {
  assert(power >= 0);
  if (power >= static_cast<int>(coeffs_.size())) {
    if (value.is_zero()) return;
    coeffs_.resize(power + 1);
  }
  coeffs_[power] = std::move(value);
  trim();
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly XPoly::operator-() const {
  XPoly r(kind_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  assert(kind_ == rhs.kind_ || is_zero() || rhs.is_zero());
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  assert(kind_ == rhs.kind_ || is_zero() || rhs.is_zero());
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  assert(a.kind_ == b.kind_ || a.is_zero() || b.is_zero());
  XPoly r(a.kind_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

XPoly XPoly::scaled(const SPoly& factor) const {
  XPoly r(kind_);
  if (factor.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c * factor);
  r.trim();
  return r;
}

bool XPoly::operator==(const XPoly& rhs) const {
  return kind_ == rhs.kind_ && coeffs_ == rhs.coeffs_;
}

double XPoly::eval_double(double x, double s_value) const {
  double result = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    result = result * x + it->eval_double(s_value);
  return result;
}

std::complex<double> XPoly::eval_complex(std::complex<double> x,
                                         double s_value) const {
  std::complex<double> result = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    result = result * x + it->eval_double(s_value);
  return result;
}

std::string XPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const SPoly& c = coeffs_[p];
    if (c.is_zero()) continue;
    bool single = c.terms().size() == 1;
    if (single) {
      Rational a = c.terms().begin()->second;
      bool negative = a < 0;
      SPoly abs_c = negative ? -c : c;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      std::string cs = abs_c.str();
      if (p == 0) {
        out << cs;
      } else {
        if (cs != "1") out << cs << "*";
        out << "x";
        if (p != 1) out << "^" << p;
      }
    } else {
      if (!first) out << " + ";
      out << "(" << c.str() << ")";
      if (p > 0) {
        out << "*x";
        if (p != 1) out << "^" << p;
      }
    }
    first = false;
  }
  return out.str();
}

}  // namespace qh
