#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qhermite/rational.hpp"

namespace qh {

// Raised when an exact division leaves a nonzero remainder. In this kernel
// that always means an identity upstream is broken, so the remainder is kept
// in printable form for diagnostics.
class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError(const std::string& what, std::string remainder)
      : std::runtime_error(what + " (remainder: " + remainder + ")"),
        remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

class ZeroBaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Laurent polynomial in the formal symbol s = q^{1/2} over Rational.
// Storing powers of s instead of q keeps half-integer powers of q integral:
// q is s^2, q^{-n/2} is s^{-n}. Zero coefficients are never stored.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(Rational constant) { set(0, std::move(constant)); }
  explicit SPoly(long constant) : SPoly(Rational(constant)) {}

  static SPoly monomial(Rational coeff, int exp);
  static SPoly one() { return SPoly(Rational(1)); }
  // s^k
  static SPoly s_power(int k) { return monomial(Rational(1), k); }
  // q^k = s^{2k}
  static SPoly q_power(int k) { return monomial(Rational(1), 2 * k); }
  // [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^{n-1}
  static SPoly q_integer(int n);

  bool is_zero() const { return terms_.empty(); }
  // Nonzero only at exponent 0.
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational() or zero
  bool has_only_even_exponents() const;

  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exp) const;

  SPoly operator-() const;
  SPoly& operator+=(const SPoly& rhs);
  SPoly& operator-=(const SPoly& rhs);
  SPoly& operator*=(const SPoly& rhs);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(SPoly a, const SPoly& b) { return a *= b; }
  bool operator==(const SPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const SPoly& rhs) const { return !(*this == rhs); }

  // s -> s^{-1}, i.e. q -> q^{-1}.
  SPoly substitute_s_inverse() const;
  // Multiply by s^k.
  SPoly shifted(int k) const;

  // Exact evaluation at a rational value of s. Throws ZeroBaseError when
  // s_value = 0 meets a negative exponent.
  Rational eval(const Rational& s_value) const;
  double eval_double(double s_value) const;
  // Exact evaluation at a rational q; requires even exponents only.
  Rational eval_q(const Rational& q_value) const;

  // Renders in q when every exponent is even, otherwise in s.
  std::string str() const;

 private:
  void set(int exp, Rational value);
  std::map<int, Rational> terms_;
};

// Returns c with b*c = a exactly; throws NotDivisibleError otherwise.
SPoly exact_div(const SPoly& a, const SPoly& b);

}  // namespace qh
