#include <doctest.h>

#include <random>
#include <vector>

#include "qhermite/spoly.hpp"

using namespace qh;

namespace {

SPoly s_pow(int k) { return SPoly::s_power(k); }
SPoly term(long num, long den, int exp) {
  return SPoly::monomial(Rational(num, den), exp);
}

// Independent schoolbook division over dense coefficient vectors, used to
// derive expected quotients before freezing them below.
std::vector<Rational> dense_div(std::vector<Rational> a,
                                const std::vector<Rational>& b) {
  REQUIRE(!b.empty());
  REQUIRE(b.back() != 0);
  REQUIRE(a.size() >= b.size());
  std::vector<Rational> q(a.size() - b.size() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    q[k] = a[k + b.size() - 1] / b.back();
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  for (const auto& r : a) REQUIRE(r == 0);
  return q;
}

SPoly random_spoly(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> exp(-6, 6);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  SPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    p += SPoly::monomial(Rational(num(rng), den(rng)), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("spoly ring operations") {
  SPoly a = s_pow(1) - s_pow(-1);
  SPoly b = s_pow(1) + s_pow(-1);
  CHECK(a * b == s_pow(2) - s_pow(-2));

  CHECK((SPoly::one() - s_pow(2)) + s_pow(2) == SPoly::one());

  SPoly lhs = SPoly::one() - s_pow(4);
  SPoly rhs = (SPoly::one() - s_pow(2)) * (SPoly::one() + s_pow(2));
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("spoly exact division") {
  CHECK(exact_div(s_pow(2) - s_pow(-2), s_pow(1) - s_pow(-1)) ==
        s_pow(1) + s_pow(-1));

  // (1 - s^6) / (1 - s^2): derive by dense long division, then check the
  // frozen value 1 + s^2 + s^4 and the ring product.
  auto quotient = dense_div({Rational(1), Rational(0), Rational(0),
                             Rational(0), Rational(0), Rational(0),
                             Rational(-1)},
                            {Rational(1), Rational(0), Rational(-1)});
  SPoly expect;
  for (size_t i = 0; i < quotient.size(); ++i)
    if (quotient[i] != 0)
      expect += SPoly::monomial(quotient[i], static_cast<int>(i));
  CHECK(expect == SPoly::one() + s_pow(2) + s_pow(4));
  SPoly div = exact_div(SPoly::one() - s_pow(6), SPoly::one() - s_pow(2));
  CHECK(div == expect);
  CHECK((SPoly::one() - s_pow(2)) * div == SPoly::one() - s_pow(6));

  CHECK_THROWS_AS(exact_div(SPoly::one() + s_pow(2), SPoly::one() - s_pow(2)),
                  NotDivisibleError);
}

TEST_CASE("spoly evaluation") {
  Rational half(1, 2);
  CHECK((s_pow(2) + SPoly::one()).eval(half) == Rational(5, 4));
  CHECK(s_pow(-2).eval(half) == Rational(4));

  SPoly sq = SPoly::one() - s_pow(2);
  CHECK((sq * sq).eval(Rational(1)) == Rational(0));

  CHECK_THROWS_AS(s_pow(-1).eval(Rational(0)), ZeroBaseError);
  CHECK(s_pow(3).eval(Rational(0)) == Rational(0));
}

TEST_CASE("spoly division is exact on random multiples") {
  std::mt19937 rng(7001);
  for (int i = 0; i < 200; ++i) {
    SPoly b = random_spoly(rng);
    if (b.is_zero()) continue;
    SPoly c = random_spoly(rng);
    SPoly a = b * c;
    if (a.is_zero()) continue;
    CHECK(b * exact_div(a, b) == a);
  }
}

TEST_CASE("spoly eval is a ring homomorphism") {
  std::mt19937 rng(7002);
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 7);
  for (int i = 0; i < 200; ++i) {
    SPoly a = random_spoly(rng);
    SPoly b = random_spoly(rng);
    Rational s(num(rng), den(rng));
    if (s == 0) s = Rational(1, 3);
    CHECK((a * b).eval(s) == a.eval(s) * b.eval(s));
    CHECK((a + b).eval(s) == a.eval(s) + b.eval(s));
  }
}

TEST_CASE("binomial quotients have k terms") {
  SPoly binom = s_pow(1) - s_pow(-1);
  for (int k = 1; k <= 40; ++k) {
    SPoly q = exact_div(s_pow(k) - s_pow(-k), binom);
    CHECK(q.terms().size() == static_cast<size_t>(k));
    CHECK(binom * q == s_pow(k) - s_pow(-k));
  }
}

TEST_CASE("spoly rendering") {
  CHECK(SPoly().str() == "0");
  CHECK((SPoly(Rational(-1)) + s_pow(2)).str() == "-1 + q");
  CHECK(term(-1, 2, 3).str() == "-1/2*s^3");
  CHECK(SPoly::q_integer(3).str() == "1 + q + q^2");
}

TEST_CASE("q helpers") {
  CHECK(SPoly::q_power(-1) == s_pow(-2));
  CHECK(SPoly::q_integer(1) == SPoly::one());
  CHECK(SPoly::q_integer(0).is_zero());
  // (1 - q^n) = (1 - q) [n]_q
  for (int n = 1; n <= 10; ++n)
    CHECK((SPoly::one() - SPoly::q_power(1)) * SPoly::q_integer(n) ==
          SPoly::one() - SPoly::q_power(n));
}
