#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tiltstab/continued_fraction.hpp"
#include "tiltstab/errors.hpp"
#include "tiltstab/polynomial.hpp"
#include "tiltstab/quadratic.hpp"

using namespace tiltstab;
using support::random_quadratic;
using support::random_rational;

namespace {
QuadraticNumber q(const char* text) { return QuadraticNumber::parse(text); }
}  // namespace

TEST_CASE("rational normal form and parsing") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational(-5, 2).str() == "-5/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), std::exception);
}

TEST_CASE("quad_sqrt") {
  CHECK(quad_sqrt(Rational(0)) == QuadraticNumber(0));
  const auto r = quad_sqrt(Rational(81, 16));
  CHECK(r.is_rational());
  CHECK(r == QuadraticNumber(Rational(9, 4)));
  const auto s = quad_sqrt(Rational(2));
  CHECK(s.a() == Rational(0));
  CHECK(s.b() == Rational(1));
  CHECK(s.d() == 2);
  CHECK(s * s == QuadraticNumber(2));
  // sqrt(8/9) = (2/3) sqrt 2
  const auto t = quad_sqrt(Rational(8, 9));
  CHECK(t.b() == Rational(2, 3));
  CHECK(t.d() == 2);
  CHECK(t * t == QuadraticNumber(Rational(8, 9)));
  CHECK_THROWS_AS(quad_sqrt(Rational(-1)), DomainError);
}

TEST_CASE("quad_sign examples") {
  CHECK(quad_sign(QuadraticNumber()) == 0);
  CHECK(quad_sign(q("-1+1*sqrt(2)")) == 1);
  CHECK(quad_sign(q("3-2*sqrt(2)")) == 1);
  CHECK(quad_sign(q("1-1*sqrt(2)")) == -1);
  CHECK(quad_sign(q("-3+2*sqrt(2)")) == -1);
}

TEST_CASE("quadratic canonical form") {
  // b = 0 forces d = 0; square factors move into b; d = 1 folds into a
  CHECK(QuadraticNumber(Rational(1), Rational(0), 7).d() == 0);
  const QuadraticNumber x(Rational(0), Rational(1), 12);
  CHECK(x.d() == 3);
  CHECK(x.b() == Rational(2));
  const QuadraticNumber y(Rational(1), Rational(2), 1);
  CHECK(y.is_rational());
  CHECK(y == QuadraticNumber(3));
  CHECK_THROWS_AS(q("sqrt(2)") + q("sqrt(3)"), MixedRadicalError);
}

TEST_CASE("quadratic parse and print round trip") {
  for (const char* text : {"0", "-5/2", "sqrt(2)", "-sqrt(5)", "1/2+1/2*sqrt(5)", "3-2*sqrt(2)", "-1/3*sqrt(7)"}) {
    const auto x = q(text);
    CHECK(QuadraticNumber::parse(x.str()) == x);
  }
  for (int i = 0; i < 200; ++i) {
    const auto x = random_quadratic(support::uniform(0, 1) ? 2 : 5);
    const auto back = QuadraticNumber::parse(x.str());
    CHECK(back == x);
    CHECK(back.d() == x.d());
  }
}

TEST_CASE("field axioms on random triples sharing a radicand") {
  for (std::int64_t d : {2, 3, 5, 7}) {
    for (int i = 0; i < 250; ++i) {
      const auto a = random_quadratic(d), b = random_quadratic(d), c = random_quadratic(d);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == QuadraticNumber(1));
    }
  }
}

TEST_CASE("sign is odd and agrees with floating point away from zero") {
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_quadratic(support::uniform(0, 1) ? 2 : 11);
    if (x.is_zero()) continue;
    CHECK(quad_sign(x) * quad_sign(-x) == -1);
    const double approx = x.a().to_double() + x.b().to_double() * std::sqrt(static_cast<double>(x.d()));
    if (std::abs(approx) > 1e-9) CHECK(quad_sign(x) == (approx > 0 ? 1 : -1));
  }
}

TEST_CASE("exact floor") {
  CHECK(q("sqrt(2)").floor() == 1);
  CHECK(q("-sqrt(2)").floor() == -2);
  CHECK(q("1/2+1/2*sqrt(5)").floor() == 1);
  CHECK(q("-7/3").floor() == -3);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_quadratic(3);
    const double approx = x.a().to_double() + x.b().to_double() * std::sqrt(3.0);
    const double frac = approx - std::floor(approx);
    if (frac > 1e-9 && frac < 1 - 1e-9) CHECK(x.floor() == static_cast<long>(std::floor(approx)));
  }
}

TEST_CASE("convergents of sqrt 2 against the Pell recurrence") {
  const auto list = dirichlet_convergents(q("sqrt(2)"), 10);
  REQUIRE(list.convergents.size() == 10);
  CHECK_FALSE(list.terminated);
  mpz_class p = 1, qq = 1;  // p_{k+1} = p_k + 2 q_k, q_{k+1} = p_k + q_k
  for (const auto& c : list.convergents) {
    CHECK(c.p == p);
    CHECK(c.q == qq);
    const mpz_class np = p + 2 * qq;
    qq = p + qq;
    p = np;
  }
  CHECK(list.convergents[3].value() == Rational(17, 12));
}

TEST_CASE("convergents of the golden ratio are Fibonacci ratios") {
  const auto list = dirichlet_convergents(q("1/2+1/2*sqrt(5)"), 10);
  REQUIRE(list.convergents.size() == 10);
  mpz_class f0 = 1, f1 = 1;  // F(k+2)/F(k+1)
  for (const auto& c : list.convergents) {
    CHECK(c.p == f1);
    CHECK(c.q == f0);
    const mpz_class f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
  CHECK(list.convergents[0].value() == Rational(1));
  CHECK(list.convergents[1].value() == Rational(2));
  CHECK(list.convergents[2].value() == Rational(3, 2));
}

TEST_CASE("rational input terminates with the exact pair") {
  const auto list = dirichlet_convergents(QuadraticNumber(Rational(3, 7)), 5);
  CHECK(list.terminated);
  REQUIRE(list.convergents.size() == 1);
  CHECK(list.convergents[0].p == 3);
  CHECK(list.convergents[0].q == 7);
  CHECK_THROWS(dirichlet_convergents(q("sqrt(2)"), 0));
}

TEST_CASE("every convergent satisfies the Dirichlet bound, cross-multiplied") {
  for (const char* text : {"sqrt(2)", "1/2+1/2*sqrt(5)", "-sqrt(2)", "3/7-2/5*sqrt(13)", "sqrt(1000003)"}) {
    const auto x = q(text);
    const auto list = dirichlet_convergents(x, 12);
    for (std::size_t k = 0; k < list.convergents.size(); ++k) {
      const auto& c = list.convergents[k];
      CHECK(satisfies_dirichlet_bound(x, c));
      // independent form: (q x - p)^2 q^2 < 1
      const QuadraticNumber err = QuadraticNumber(Rational(c.q)) * x - QuadraticNumber(Rational(c.p));
      CHECK(err * err * QuadraticNumber(Rational(mpz_class(c.q * c.q))) < QuadraticNumber(1));
      if (k > 0) CHECK(list.convergents[k - 1].q <= c.q);
      if (k > 1) CHECK(list.convergents[k - 1].q < c.q);
    }
  }
}

TEST_CASE("polynomials") {
  const Polynomial m = Polynomial::x();
  const Polynomial p = m * m * m + Polynomial(Rational(-2)) * m + Polynomial(Rational(1, 2));
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(1) == Rational(-2));
  CHECK(p.coefficient(2) == Rational(0));
  CHECK(p.evaluate(Rational(2)) == Rational(9, 2));
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p.evaluate(q("sqrt(2)")) == QuadraticNumber(Rational(1, 2)));
  CHECK(p.coefficients().count(2) == 0);
}
