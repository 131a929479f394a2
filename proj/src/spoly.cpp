#include "qhermite/spoly.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace qh {

namespace {

constexpr int kMaxExponent = 1 << 24;

void check_exponent(long long e) {
  if (e > kMaxExponent || e < -kMaxExponent) {
    // Degrees at desk scale stay far below this; blowing past it means a
    // runaway computation, not a legitimate value.
    std::abort();
  }
}

}  // namespace

void SPoly::set(int exp, Rational value) {
  if (value == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(value);
}

SPoly SPoly::monomial(Rational coeff, int exp) {
  SPoly p;
  p.set(exp, std::move(coeff));
  return p;
}

SPoly SPoly::q_integer(int n) {
  assert(n >= 0);
  SPoly p;
  for (int j = 0; j < n; ++j) p.set(2 * j, Rational(1));
  return p;
}

bool SPoly::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational SPoly::rational_value() const {
  if (terms_.empty()) return Rational(0);
  assert(is_rational());
  return terms_.begin()->second;
}

bool SPoly::has_only_even_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

int SPoly::min_exponent() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

int SPoly::max_exponent() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

Rational SPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

SPoly SPoly::operator-() const {
  SPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

SPoly& SPoly::operator+=(const SPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SPoly& SPoly::operator*=(const SPoly& rhs) {
  SPoly result;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      check_exponent(static_cast<long long>(ea) + eb);
      int e = ea + eb;
      auto it = result.terms_.find(e);
      if (it == result.terms_.end()) {
        result.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) result.terms_.erase(it);
      }
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

SPoly SPoly::substitute_s_inverse() const {
  SPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

SPoly SPoly::shifted(int k) const {
  SPoly r;
  for (const auto& [e, c] : terms_) {
    check_exponent(static_cast<long long>(e) + k);
    r.terms_[e + k] = c;
  }
  return r;
}

Rational SPoly::eval(const Rational& s_value) const {
  if (terms_.empty()) return Rational(0);
  if (s_value == 0 && min_exponent() < 0)
    throw ZeroBaseError("SPoly::eval: negative exponent at s = 0");
  Rational result(0);
  Rational inv = s_value == 0 ? Rational(0) : Rational(1) / s_value;
  for (const auto& [e, c] : terms_) {
    Rational power(1);
    if (e >= 0)
      for (int i = 0; i < e; ++i) power *= s_value;
    else
      for (int i = 0; i < -e; ++i) power *= inv;
    result += c * power;
  }
  return result;
}

double SPoly::eval_double(double s_value) const {
  double result = 0.0;
  for (const auto& [e, c] : terms_)
    result += to_double(c) * std::pow(s_value, e);
  return result;
}

Rational SPoly::eval_q(const Rational& q_value) const {
  assert(has_only_even_exponents());
  if (terms_.empty()) return Rational(0);
  if (q_value == 0 && min_exponent() < 0)
    throw ZeroBaseError("SPoly::eval_q: negative exponent at q = 0");
  Rational result(0);
  Rational inv = q_value == 0 ? Rational(0) : Rational(1) / q_value;
  for (const auto& [e, c] : terms_) {
    int k = e / 2;
    Rational power(1);
    if (k >= 0)
      for (int i = 0; i < k; ++i) power *= q_value;
    else
      for (int i = 0; i < -k; ++i) power *= inv;
    result += c * power;
  }
  return result;
}

std::string SPoly::str() const {
  if (terms_.empty()) return "0";
  bool in_q = has_only_even_exponents();
  const char* var = in_q ? "q" : "s";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    int p = in_q ? e / 2 : e;
    if (p == 0) {
      out << rat_str(a);
    } else {
      if (a != 1) out << rat_str(a) << "*";
      out << var;
      if (p != 1) out << "^" << p;
    }
  }
  return out.str();
}

SPoly exact_div(const SPoly& a, const SPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (a.is_zero()) return SPoly();

  // Shift both to ordinary polynomials and run schoolbook division over the
  // rationals; the Laurent shift difference moves the quotient back.
  int sa = a.min_exponent(), sb = b.min_exponent();
  int da = a.max_exponent() - sa, db = b.max_exponent() - sb;
  if (da < db)
    throw NotDivisibleError("exact_div: degree of dividend too small", a.str());

  std::vector<Rational> rem(da + 1), div(db + 1);
  for (const auto& [e, c] : a.terms()) rem[e - sa] = c;
  for (const auto& [e, c] : b.terms()) div[e - sb] = c;

  std::vector<Rational> quot(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    Rational factor = rem[k + db] / div[db];
    quot[k] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= factor * div[j];
  }

  SPoly remainder;
  for (int i = 0; i <= da; ++i)
    if (rem[i] != 0) remainder += SPoly::monomial(rem[i], i + sa);
  if (!remainder.is_zero())
    throw NotDivisibleError("exact_div: not divisible", remainder.str());

  SPoly result;
  for (int k = 0; k <= da - db; ++k)
    if (quot[k] != 0) result += SPoly::monomial(quot[k], k + sa - sb);
  return result;
}

}  // namespace qh
