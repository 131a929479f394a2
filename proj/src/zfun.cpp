#include "qhermite/zfun.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace qh {

ZFun ZFun::constant(SPoly c, VariableKind kind) {
  return monomial(std::move(c), 0, kind);
}

ZFun ZFun::monomial(SPoly c, int exp, VariableKind kind) {
  ZFun f(kind);
  if (!c.is_zero()) f.terms_[exp] = std::move(c);
  return f;
}

SPoly ZFun::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? SPoly() : it->second;
}

int ZFun::min_exponent() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

int ZFun::max_exponent() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

bool ZFun::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    SPoly mirror = coeff(-e);
    if (kind_ == VariableKind::hyperbolic && (e % 2 != 0)) mirror = -mirror;
    if (c != mirror) return false;
  }
  return true;
}

void ZFun::set_coeff(int exp, SPoly value) {
  if (value.is_zero())
    terms_.erase(exp);
  else
    terms_[exp] = std::move(value);
}

ZFun ZFun::operator-() const {
  ZFun r(kind_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

ZFun& ZFun::operator+=(const ZFun& rhs) {
  assert(kind_ == rhs.kind_ || is_zero() || rhs.is_zero());
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ZFun& ZFun::operator-=(const ZFun& rhs) {
  assert(kind_ == rhs.kind_ || is_zero() || rhs.is_zero());
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ZFun operator*(const ZFun& a, const ZFun& b) {
  assert(a.kind_ == b.kind_ || a.is_zero() || b.is_zero());
  ZFun r(a.kind_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        SPoly prod = ca * cb;
        if (!prod.is_zero()) r.terms_[e] = std::move(prod);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ZFun ZFun::scaled(const SPoly& factor) const {
  ZFun r(kind_);
  if (factor.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * factor;
  return r;
}

ZFun ZFun::shifted(int k) const {
  ZFun r(kind_);
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

bool ZFun::operator==(const ZFun& rhs) const {
  return kind_ == rhs.kind_ && terms_ == rhs.terms_;
}

std::string ZFun::str() const {
  if (terms_.empty()) return "0";
  const char* var = kind_ == VariableKind::cosine ? "z" : "w";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
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
      if (e == 0) {
        out << cs;
      } else {
        if (cs != "1") out << cs << "*";
        out << var << (e == 1 ? "" : "^" + std::to_string(e));
      }
    } else {
      if (!first) out << " + ";
      out << "(" << c.str() << ")";
      if (e != 0) out << "*" << var << (e == 1 ? "" : "^" + std::to_string(e));
    }
    first = false;
  }
  return out.str();
}

ZFun scale_substitute(const ZFun& f, int k) {
  ZFun r(f.kind());
  for (const auto& [e, c] : f.terms())
    r.set_coeff(e, c.shifted(k * e));
  return r;
}

ZFun exact_div_binomial(const ZFun& f, BinomialSign sign) {
  // f / (z -+ z^-1) = f*z / (z^2 -+ 1): shift to an ordinary polynomial in z
  // and divide densely by z^2 -+ 1.
  if (f.is_zero()) return ZFun(f.kind());
  const int sigma = sign == BinomialSign::minus ? 1 : -1;

  int lo = f.min_exponent(), hi = f.max_exponent();
  // Dividend g = f * z with exponents rebased to start at zero.
  int glo = lo + 1, ghi = hi + 1;
  std::vector<SPoly> rem(ghi - glo + 1);
  for (const auto& [e, c] : f.terms()) rem[e + 1 - glo] = c;

  int deg = ghi - glo;
  std::vector<SPoly> quot(deg >= 2 ? deg - 1 : 0);
  for (int k = deg - 2; k >= 0; --k) {
    SPoly factor = rem[k + 2];
    quot[k] = factor;
    if (factor.is_zero()) continue;
    rem[k + 2] = SPoly();
    // subtract factor * (z^2 - sigma) from position k
    if (sigma == 1)
      rem[k] += factor;
    else
      rem[k] -= factor;
  }

  ZFun remainder(f.kind());
  for (int i = 0; i < static_cast<int>(rem.size()) && i < 2; ++i)
    if (!rem[i].is_zero()) remainder.set_coeff(i + glo - 1, rem[i]);
  if (!remainder.is_zero())
    throw NotDivisibleError("exact_div_binomial: not divisible",
                            remainder.str());

  // f*z = z^{glo} * (quot * (z^2 -+ 1)), so the quotient of f itself carries
  // exponents glo + k.
  ZFun result(f.kind());
  for (int k = 0; k < static_cast<int>(quot.size()); ++k)
    if (!quot[k].is_zero()) result.set_coeff(k + glo, quot[k]);
  return result;
}

ZFun x_to_z(const XPoly& p) {
  // Horner in the Laurent ring with X = (z + z^-1)/2 or (w - w^-1)/2.
  ZFun x_image(p.kind());
  Rational half(1, 2);
  x_image.set_coeff(1, SPoly(half));
  x_image.set_coeff(-1, p.kind() == VariableKind::cosine ? SPoly(half)
                                                         : SPoly(-half));
  ZFun result(p.kind());
  for (int j = p.degree(); j >= 0; --j) {
    result = result * x_image;
    result += ZFun::constant(p.coeff(j), p.kind());
  }
  return result;
}

XPoly z_to_x(const ZFun& f) {
  if (!f.is_symmetric())
    throw NotSymmetricError("z_to_x: input violates the " +
                            std::string(f.kind() == VariableKind::cosine
                                            ? "z -> z^-1"
                                            : "w -> -w^-1") +
                            " symmetry");
  XPoly result(f.kind());
  ZFun rest = f;
  while (!rest.is_zero()) {
    int k = rest.max_exponent();
    assert(k >= 0);
    // x^k contributes 2^-k z^k at the top.
    SPoly coeff_k = rest.coeff(k);
    for (int i = 0; i < k; ++i) coeff_k += coeff_k;  // * 2^k
    result.set_coeff(k, coeff_k);
    rest -= x_to_z(XPoly::monomial(coeff_k, k, f.kind()));
    assert(rest.is_zero() || rest.max_exponent() < k);
  }
  return result;
}

Dressed dressed_shift(const Dressed& d, int k) {
  assert(k == 1 || k == -1);
  assert(d.weight_exponent == 0 || d.weight_exponent == 1);
  assert(d.part.kind() == VariableKind::cosine);
  Dressed r{scale_substitute(d.part, k), d.weight_exponent};
  if (d.weight_exponent == 1) {
    SPoly factor = SPoly::monomial(Rational(-1), -1);  // -1/s
    r.part = r.part.shifted(-2 * k).scaled(factor);
  }
  return r;
}

}  // namespace qh
