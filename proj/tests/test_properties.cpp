#include <doctest.h>

#include "support.hpp"
#include "tiltstab/chern.hpp"
#include "tiltstab/serialize.hpp"
#include "tiltstab/tilt.hpp"

using namespace tiltstab;
using chern::ProjectedChern;
using support::random_projected;
using support::random_rational;

namespace {

constexpr int kTrials = 1000;

Scalar random_alpha() {
  Rational a;
  do a = random_rational(8, 5);
  while (a.sign() <= 0);
  return Scalar(a);
}

/// A random character with nonnegative delta-bar and a defined beta-bar.
ProjectedChern random_admissible() {
  while (true) {
    const auto p = random_projected();
    if (p.e0.is_zero() && p.e1.is_zero()) continue;
    if (chern::delta_bar(p).sign() < 0) continue;
    if (!chern::delta_bar(p).is_rational()) continue;
    return p;
  }
}

}  // namespace

TEST_CASE("delta-bar is twist invariant") {
  for (int i = 0; i < kTrials; ++i) {
    const auto p = random_projected();
    CHECK(chern::delta_bar(chern::twist(p, Scalar(random_rational()))) == chern::delta_bar(p));
    CHECK(chern::delta_bar(chern::twist(p, support::random_quadratic(3))) == chern::delta_bar(p));
  }
}

TEST_CASE("H ch2 vanishes at beta-bar") {
  int rank_zero = 0;
  for (int i = 0; i < kTrials; ++i) {
    auto p = random_admissible();
    if (i % 4 == 0) {
      p.e0 = Rational(0);
      if (p.e1.is_zero()) p.e1 = Scalar(1);
    }
    if (p.e0.is_zero()) ++rank_zero;
    CHECK(chern::twist(p, chern::beta_bar(p)).e2.is_zero());
  }
  CHECK(rank_zero > 100);
}

TEST_CASE("line bundle discriminants follow the Hodge index inequality") {
  for (const auto& model : support::product_models()) {
    const auto h = model.sum_of_generators();
    for (int i = 0; i < kTrials / 3; ++i) {
      const auto d = support::random_divisor(model);
      const auto p = chern::project(model, h, geometry::chern_of_line_bundle(model, d));
      const Rational h2d = geometry::intersect3(model, h, h, d);
      const Rational hodge = h2d * h2d - geometry::intersect3(model, h, h, h) * geometry::intersect3(model, h, d, d);
      CHECK(chern::delta_bar(p) == Scalar(hodge));
      CHECK(hodge.sign() >= 0);
      const Rational c = support::random_rational();
      const auto pc = chern::project(model, h, geometry::chern_of_line_bundle(model, c * h));
      CHECK(chern::delta_bar(pc).is_zero());
    }
    for (long long c = -3; c <= 3; ++c) {
      const auto p = chern::project(model, h, geometry::chern_of_line_bundle(model, Rational(c) * h));
      const auto r = tilt::reduced_check(p);
      CHECK(r.value.is_zero());
      CHECK(r.beta_bar == Scalar(c));
      CHECK(chern::twist(p, Scalar(c)).is_zero() == false);  // e0 survives
      CHECK(chern::twist(p, Scalar(c)).e1.is_zero());
    }
  }
}

TEST_CASE("twists compose") {
  for (int i = 0; i < kTrials; ++i) {
    const auto p = random_projected();
    const Scalar b1(random_rational()), b2(random_rational());
    CHECK(chern::twist(chern::twist(p, b1), b2) == chern::twist(p, b1 + b2));
    const Scalar q1 = support::random_quadratic(5), q2 = support::random_quadratic(5);
    CHECK(chern::twist(chern::twist(p, q1), q2) == chern::twist(p, q1 + q2));
  }
}

TEST_CASE("Im Z is sqrt3 alpha times the nu numerator") {
  for (int i = 0; i < kTrials; ++i) {
    const auto p = random_projected();
    const tilt::TiltPoint t(random_alpha(), Scalar(random_rational()));
    const auto z = tilt::central_charge(p, t);
    const Scalar num = tilt::nu_numerator(p, t);
    CHECK(z.im_over_sqrt3 == t.alpha() * num);
    const auto tw = chern::twist(p, t.beta());
    if (!tw.e1.is_zero()) CHECK((num.is_zero() == (z.im_sign() == 0)));
  }
}

TEST_CASE("Frobenius action on projections") {
  for (const auto& model : support::product_models()) {
    const auto h = model.sum_of_generators();
    for (int i = 0; i < kTrials / 3; ++i) {
      const auto v = support::random_character(model);
      const auto p = chern::project(model, h, v);
      for (long long q : {2LL, 3LL}) {
        const auto w = chern::project(model, h, geometry::frob_action(model, q * q, q, v));
        const Rational q2(q * q);
        CHECK(w.e0 == p.e0);
        CHECK(w.e1 == Scalar(q2) * p.e1);
        CHECK(w.e2 == Scalar(q2 * q2) * p.e2);
        CHECK(w.e3 == Scalar(q2 * q2 * q2) * p.e3);
      }
      const long long a = support::uniform(1, 3), b = support::uniform(1, 3);
      const long long a2 = support::uniform(1, 3), b2 = support::uniform(1, 3);
      CHECK(geometry::frob_action(model, a, b, geometry::frob_action(model, a2, b2, v)) ==
            geometry::frob_action(model, a * a2, b * b2, v));
    }
  }
}

TEST_CASE("nu is invariant under pullback along multiplication maps") {
  for (const auto& model : support::product_models()) {
    const auto h = model.sum_of_generators();
    for (int i = 0; i < 60; ++i) {
      const auto v = support::random_character(model);
      const tilt::TiltPoint t(random_alpha(), Scalar(random_rational()));
      const auto base = tilt::nu_slope(chern::project(model, h, v), t);
      for (long long b = 1; b <= 5; ++b) {
        const auto hb = geometry::pullback_divisor(model, 1, b, h);
        const auto vb = geometry::frob_action(model, 1, b, v);
        CHECK(tilt::nu_slope(chern::project(model, hb, vb), t) == base);
      }
    }
  }
}

TEST_CASE("BMT saturation for line bundles on the nu = 0 locus") {
  for (const auto& model : support::product_models()) {
    const auto h = model.sum_of_generators();
    for (long long c = -3; c <= 3; ++c) {
      const auto p = chern::project(model, h, geometry::chern_of_line_bundle(model, Rational(c) * h));
      const Polynomial beta = Polynomial(Rational(c)) - Polynomial::x();
      CHECK(tilt::nu_numerator_in_alpha(p, beta).is_zero());
      CHECK(tilt::bmt_surplus_in_alpha(p, beta).is_zero());
    }
  }
}

TEST_CASE("serialization round trips") {
  for (int i = 0; i < kTrials; ++i) {
    const Rational r = random_rational(1000, 1000);
    CHECK(io::rational_from_json(io::to_json(r)) == r);
    const auto x = support::random_quadratic(support::uniform(0, 1) ? 2 : 7);
    CHECK(io::quadratic_from_json(io::to_json(x)) == x);
    CHECK(io::scalar_from_json(io::scalar_to_json(x)) == x);
    const auto p = random_projected();
    CHECK(io::projected_from_json(io::to_json(p)) == p);
    CHECK(ProjectedChern::parse(p.str()) == p);
  }
  const Polynomial poly = Polynomial::monomial(Rational(1, 2), 6) + Polynomial::monomial(Rational(-3), 1);
  CHECK(io::polynomial_from_json(io::to_json(poly)) == poly);
  for (const auto& model : support::product_models()) {
    const auto d = support::random_divisor(model);
    CHECK(io::divisor_from_json(model, io::to_json(model, d)) == d);
  }
  CHECK(io::to_json(Rational(-3, 6)).get<std::string>() == "-1/2");
  CHECK(io::to_json(QuadraticNumber::parse("1/2+3*sqrt(5)")).dump() == R"({"a":"1/2","b":"3","d":5})");
}
