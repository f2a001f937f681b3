#include <doctest.h>

#include "support.hpp"
#include "tiltstab/chern.hpp"
#include "tiltstab/errors.hpp"
#include "tiltstab/tilt.hpp"

using namespace tiltstab;
using chern::ProjectedChern;
using tilt::TiltPoint;

namespace {

ProjectedChern pc(const char* text) { return ProjectedChern::parse(text); }
Scalar sc(const char* text) { return Scalar::parse(text); }

/// e^{-beta} expansion written out term by term.
ProjectedChern twist_oracle(const ProjectedChern& p, const Scalar& b) {
  const Scalar e0(p.e0);
  return {p.e0, p.e1 - b * e0, p.e2 - b * p.e1 + b * b * e0 / Scalar(2),
          p.e3 - b * p.e2 + b * b * p.e1 / Scalar(2) - b * b * b * e0 / Scalar(6)};
}

}  // namespace

TEST_CASE("projection") {
  const auto cy = geometry::ThreefoldModel::cy3_with_plane(Rational(2));
  for (long long m = 2; m <= 5; ++m) {
    const auto h = Rational(m) * cy.generator("L") - Rational(1, 2) * cy.generator("D");
    CHECK(chern::project(cy, h, geometry::structure_sheaf_of_plane(cy)) == pc("0,9/4,9/4,3/2"));
  }
  const auto p2c = geometry::ThreefoldModel::p2_x_elliptic_curve();
  const auto h = p2c.sum_of_generators();
  CHECK(chern::project(p2c, h, geometry::chern_of_line_bundle(p2c, p2c.zero())) == pc("3,0,0,0"));
  CHECK(chern::project(p2c, h, geometry::zero_character(p2c)).is_zero());
  CHECK_THROWS_AS(chern::project(p2c, p2c.generator("h"), geometry::zero_character(p2c)), PreconditionError);
}

TEST_CASE("twist") {
  CHECK(chern::twist(pc("0,9/4,9/4,3/2"), Scalar(1)) == pc("0,9/4,0,3/8"));
  const auto p = pc("2,-1/3,5,7/2");
  CHECK(chern::twist(p, Scalar(0)) == p);
  CHECK(chern::twist(pc("3,0,0,0"), Scalar(-1)) == pc("3,3,3/2,1/2"));
  // (3,3,3/2,1/2) is the projection of O(H) on P2xC
  const auto p2c = geometry::ThreefoldModel::p2_x_elliptic_curve();
  const auto h = p2c.sum_of_generators();
  CHECK(chern::project(p2c, h, geometry::chern_of_line_bundle(p2c, h)) == pc("3,3,3/2,1/2"));
  for (int i = 0; i < 200; ++i) {
    const auto r = support::random_projected();
    const Scalar b(support::random_rational());
    CHECK(chern::twist(r, b) == twist_oracle(r, b));
    const Scalar bq = support::random_quadratic(2);
    CHECK(chern::twist(r, bq) == twist_oracle(r, bq));
  }
}

TEST_CASE("delta bar") {
  CHECK(chern::delta_bar(pc("3,3,3/2,0")) == Scalar(0));
  CHECK(chern::delta_bar(pc("0,9/4,9/4,0")) == Scalar(Rational(81, 16)));
  CHECK(chern::delta_bar(pc("1,0,-1,0")) == Scalar(2));
}

TEST_CASE("beta bar") {
  CHECK(chern::beta_bar(pc("1,0,0,0")) == Scalar(0));
  CHECK(chern::beta_bar(pc("0,9/4,9/4,3/2")) == Scalar(1));
  CHECK(chern::beta_bar(pc("1,0,-1,0")) == sc("-sqrt(2)"));
  CHECK_THROWS_AS(chern::beta_bar(pc("0,0,1,0")), DomainError);
  CHECK_THROWS_AS(chern::beta_bar(pc("1,0,1,0")), DomainError);
}

TEST_CASE("slopes") {
  CHECK(tilt::mu_slope(pc("0,9/4,0,0"), Scalar(5)).infinite);
  CHECK(tilt::mu_slope(pc("3,3,0,0"), Scalar(0)) == tilt::Slope::finite(Scalar(1)));
  CHECK(tilt::mu_slope(pc("1,0,0,0"), Scalar(-1)) == tilt::Slope::finite(Scalar(1)));
  CHECK(tilt::Slope::infinity() > tilt::Slope::finite(Scalar(1000)));

  const auto od = pc("0,9/4,9/4,3/2");
  for (const char* a : {"1/10", "1/2", "1", "7/3", "sqrt(2)"}) {
    CHECK(tilt::nu_slope(od, TiltPoint(sc(a), Scalar(1))) == tilt::Slope::finite(Scalar(0)));
  }
  // O at beta = -alpha sits on nu = 0
  for (const char* a : {"1/3", "2", "sqrt(5)"}) {
    const Scalar alpha = sc(a);
    CHECK(tilt::nu_slope(pc("4,0,0,0"), TiltPoint(alpha, -alpha)) == tilt::Slope::finite(Scalar(0)));
  }
  CHECK(tilt::nu_slope(pc("1,1,0,0"), TiltPoint(Scalar(1), Scalar(1))).infinite);
  CHECK_THROWS(TiltPoint(Scalar(0), Scalar(0)));
  CHECK_THROWS(TiltPoint(Scalar(-1), Scalar(0)));
}

TEST_CASE("central charge") {
  const auto z = tilt::central_charge(pc("0,0,0,5"), TiltPoint(Scalar(Rational(1, 2)), Scalar(3)));
  CHECK(z.re == Scalar(-5));
  CHECK(z.im_over_sqrt3.is_zero());
  // O_D[1] at beta = 1: re = 3/8 - 27/8 alpha^2
  for (const char* a : {"1/10", "1/3", "1", "2"}) {
    const Scalar alpha = sc(a);
    const auto w = tilt::central_charge(-pc("0,9/4,9/4,3/2"), TiltPoint(alpha, Scalar(1)));
    CHECK(w.re == Scalar(Rational(3, 8)) - Scalar(Rational(27, 8)) * alpha * alpha);
    CHECK(w.im_over_sqrt3.is_zero());
  }
}

TEST_CASE("BMT surplus") {
  for (const char* a : {"1/5", "1", "3"}) {
    const Scalar alpha = sc(a);
    CHECK(tilt::bmt_surplus(pc("2,0,0,0"), TiltPoint(alpha, -alpha)).is_zero());
    const Scalar s = tilt::bmt_surplus(pc("0,9/4,9/4,3/2"), TiltPoint(alpha, Scalar(1)));
    CHECK(s == Scalar(Rational(3, 8)) * (alpha * alpha - Scalar(1)));
    CHECK(tilt::bmt_surplus(pc("0,2,0,-1"), TiltPoint(alpha, Scalar(0))) == alpha * alpha / Scalar(3) + Scalar(1));
  }
  const Polynomial s = tilt::bmt_surplus_in_alpha(pc("0,9/4,9/4,3/2"), Polynomial(Rational(1)));
  CHECK(s == Polynomial::monomial(Rational(3, 8), 2) + Polynomial(Rational(-3, 8)));
}

TEST_CASE("reduced check") {
  const auto o = tilt::reduced_check(pc("5,0,0,0"));
  CHECK(o.verdict);
  CHECK(o.value.is_zero());
  const auto od = tilt::reduced_check(pc("0,9/4,9/4,3/2"));
  CHECK_FALSE(od.verdict);
  CHECK(od.value == Scalar(Rational(3, 8)));
  CHECK(od.beta_bar == Scalar(1));
  CHECK_FALSE(od.beta_bar_in_unit_interval);
  const auto r = tilt::reduced_check(pc("1,0,-1,0"));
  CHECK(r.verdict);
  // e3 - b e2 + b^2/2 e1 - b^3/6 e0 at b = -sqrt 2: -sqrt2 + 2 sqrt2 / 6
  CHECK(r.value == sc("-2/3*sqrt(2)"));
  CHECK(r.rank_nonnegative);
}

TEST_CASE("nu = 0 locus in alpha") {
  const auto a = tilt::nu_zero_alpha(pc("1,0,0,0"), Scalar(-1));
  CHECK(a.kind == tilt::NuZeroLocus::Kind::Point);
  CHECK(a.alpha == Scalar(1));
  CHECK(tilt::nu_zero_alpha(pc("0,9/4,9/4,3/2"), Scalar(1)).kind == tilt::NuZeroLocus::Kind::Independent);
  CHECK(tilt::nu_zero_alpha(pc("1,0,-1,0"), Scalar(0)).kind == tilt::NuZeroLocus::Kind::Empty);
  CHECK(tilt::nu_zero_alpha(pc("0,9/4,9/4,3/2"), Scalar(0)).kind == tilt::NuZeroLocus::Kind::Empty);
}

TEST_CASE("charge conventions at beta = 1 for the plane") {
  const auto od = pc("0,9/4,9/4,3/2");
  const Polynomial one(Rational(1));
  const auto re_omega = -tilt::central_charge_re_in_alpha(od, one, tilt::ChargeConvention::OmegaSqrt3);
  const auto re_app = -tilt::central_charge_re_in_alpha(od, one, tilt::ChargeConvention::DisplayedFormula);
  CHECK(re_omega == Polynomial(Rational(3, 8)) + Polynomial::monomial(Rational(-27, 8), 2));
  CHECK(re_app == Polynomial(Rational(3, 8)) * (Polynomial(Rational(1)) - Polynomial::monomial(Rational(1), 2)));
}
