#include <doctest.h>

#include "support.hpp"
#include "tiltstab/errors.hpp"
#include "tiltstab/walls.hpp"

using namespace tiltstab;
using namespace tiltstab::walls;
using chern::ProjectedChern;

namespace {

ProjectedChern pc(const char* text) { return ProjectedChern::parse(text); }

/// nu(v) = nu(w) cross-multiplied, straight from the slope definition.
Scalar slope_difference(const ProjectedChern& v, const ProjectedChern& w, const tilt::TiltPoint& t) {
  return tilt::nu_numerator(v, t) * chern::twist(w, t.beta()).e1 - tilt::nu_numerator(w, t) * chern::twist(v, t.beta()).e1;
}

bool has_wall(const std::vector<Wall>& ws, const Scalar& center, const Scalar& r2) {
  for (const auto& w : ws) {
    if (w.kind == WallKind::Semicircle && w.center == center && w.radius_squared == r2) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("wall between two characters") {
  const auto w = wall_between(pc("1,0,0,0"), pc("0,1,1,0"));
  REQUIRE(w.kind == WallKind::Semicircle);
  CHECK(w.center == Scalar(1));
  CHECK(w.radius == Scalar(1));
  // the hand-solved circle (beta - 1)^2 + alpha^2 = 1
  for (auto [a, b] : {std::pair{"3/5", "1/5"}, std::pair{"1", "1"}, std::pair{"4/5", "8/5"}}) {
    const tilt::TiltPoint t(Scalar::parse(a), Scalar::parse(b));
    CHECK(slope_difference(pc("1,0,0,0"), pc("0,1,1,0"), t).is_zero());
  }
  CHECK(wall_between(pc("1,2,3,4"), pc("2,4,6,1")).kind == WallKind::EverywhereEqual);
  CHECK(wall_between(pc("1,0,0,0"), pc("0,1,0,0")).kind == WallKind::NoWall);
  const auto vert = wall_between(pc("1,1,0,0"), pc("2,2,1,0"));
  CHECK(vert.kind == WallKind::Vertical);
}

TEST_CASE("walls are symmetric and exact on sampled points") {
  int semicircles = 0;
  for (int i = 0; i < 400; ++i) {
    const auto v = support::random_projected();
    const auto w = support::random_projected();
    const auto a = wall_between(v, w);
    const auto b = wall_between(w, v);
    CHECK(a.kind == b.kind);
    if (a.is_wall()) CHECK(a.center == b.center);
    if (a.kind != WallKind::Semicircle) continue;
    ++semicircles;
    CHECK(a.radius_squared == b.radius_squared);
    for (long long k = 1; k <= 8; ++k) {
      const auto t = point_on_wall(a, Rational(k, 3));
      CHECK(slope_difference(v, w, t).is_zero());
      CHECK(wall_equation(v, w).evaluate(t.alpha(), t.beta()).is_zero());
      const auto nv = tilt::nu_slope(v, t), nw = tilt::nu_slope(w, t);
      if (!nv.infinite && !nw.infinite) CHECK(nv == nw);
    }
  }
  CHECK(semicircles > 50);
}

TEST_CASE("rank zero center") {
  CHECK(wall_center_rank0(pc("0,9/4,9/4,3/2")) == Scalar(1));
  CHECK(wall_center_rank0(pc("0,2,-3,0")) == Scalar(Rational(-3, 2)));
  CHECK(wall_center_rank0(pc("0,5,0,0")) == Scalar(0));
  CHECK_THROWS_AS(wall_center_rank0(pc("0,0,1,0")), DomainError);
  CHECK_THROWS_AS(wall_center_rank0(pc("1,1,1,0")), PreconditionError);
}

TEST_CASE("radius bound") {
  CHECK(radius_bound(Rational(2), 2, 1) == Rational(9, 119));
  CHECK(radius_bound(Rational(2), 3) < radius_bound(Rational(2), 2));
  CHECK(radius_bound(Rational(2), 4) < radius_bound(Rational(2), 3));
  const auto cy = geometry::ThreefoldModel::cy3_with_plane(Rational(5));
  const auto h = Rational(3) * cy.generator("L") - Rational(1, 2) * cy.generator("D");
  CHECK(geometry::intersect3(cy, h, h, h) == Rational(27 * 5) - Rational(9, 8));
  for (long long s = 1; s <= 5; ++s)
    for (long long m = 2; m <= 5; ++m)
      for (long long r0 = 1; r0 <= 3; ++r0) CHECK(radius_bound(Rational(s), m, r0) < Rational(1));
  CHECK_THROWS_AS(radius_bound(Rational(1, 100), 2, 1), DomainError);
  CHECK_THROWS_AS(radius_bound(Rational(2), 1, 1), PreconditionError);
}

TEST_CASE("counterexample certificate") {
  const auto c = counterexample_certificate(Rational(2), 2);
  CHECK(c.projected == pc("0,9/4,9/4,3/2"));
  CHECK(c.twisted == pc("0,9/4,0,3/8"));
  CHECK(c.projected_matches);
  CHECK(c.twisted_matches);
  CHECK(c.nu_vanishes_identically);
  CHECK(c.radius_bound == Rational(9, 119));
  CHECK(c.thresholds.omega_sqrt3 == Scalar(Rational(1, 3)));
  CHECK(c.thresholds.displayed_formula == Scalar(1));
  CHECK(c.thresholds.discrepancy());
  CHECK(c.window_nonempty);
  CHECK(c.window_nonempty_displayed);
  CHECK(c.center == Scalar(1));
  for (long long s = 1; s <= 5; ++s)
    for (long long m = 2; m <= 5; ++m) CHECK(counterexample_certificate(Rational(s), m).window_nonempty);
}

TEST_CASE("destabilizer scan") {
  const auto found = destabilizer_scan(pc("1,0,0,0"), CharacterBox::symmetric(2));
  CHECK(has_wall(found, Scalar(1), Scalar(1)));
  for (const auto& w : found) CHECK(w.is_wall());
  // sorted and distinct
  for (std::size_t i = 1; i < found.size(); ++i) {
    const auto& a = found[i - 1];
    const auto& b = found[i];
    CHECK((a.kind != b.kind || a.center != b.center || a.radius_squared != b.radius_squared));
  }
  CharacterBox empty = CharacterBox::symmetric(2);
  empty.lower[1] = Rational(3);
  CHECK(destabilizer_scan(pc("1,0,0,0"), empty).empty());
  // w = v is filtered: a box containing only v gives nothing
  CharacterBox only_v;
  only_v.lower = {Rational(3), Rational(3), Rational(3, 2)};
  only_v.upper = only_v.lower;
  only_v.max_denominator = 2;
  CHECK(destabilizer_scan(pc("3,3,3/2,1/2"), only_v).empty());
  CHECK_THROWS_AS(destabilizer_scan(pc("1,0,1,0"), CharacterBox::symmetric(1)), PreconditionError);
}

TEST_CASE("rational grid") {
  const auto g = rational_grid(Rational(-1), Rational(1), 2);
  CHECK(g == std::vector<Rational>{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)});
  CHECK(rational_grid(Rational(1), Rational(0), 3).empty());
}

TEST_CASE("bmt scan classification") {
  for (const auto& model : support::product_models()) {
    const auto h = model.sum_of_generators();
    std::vector<geometry::CohVector> chars;
    for (long long c = -2; c <= 2; ++c) chars.push_back(geometry::chern_of_line_bundle(model, Rational(c) * h));
    std::vector<Rational> betas;
    for (long long k = -6; k <= 6; ++k) betas.push_back(Rational(k, 2));
    const auto r = bmt_scan(model, h, chars, betas);
    REQUIRE(r.characters.size() == chars.size());
    for (const auto& c : r.characters) {
      CHECK(c.overall == BmtClass::Saturated);
      for (const auto& s : c.samples) {
        CHECK((s.classification == BmtClass::Saturated || s.classification == BmtClass::NoLocus));
      }
    }
    CHECK(bmt_scan(model, h, chars, {}).characters.empty());
  }
  const auto cy = geometry::ThreefoldModel::cy3_with_plane(Rational(2));
  const auto h = Rational(2) * cy.generator("L") - Rational(1, 2) * cy.generator("D");
  const auto r = bmt_scan(cy, h, {geometry::structure_sheaf_of_plane(cy)}, {Rational(1)});
  REQUIRE(r.characters.size() == 1);
  const auto& s = r.characters[0].samples.at(0);
  CHECK(s.locus == tilt::NuZeroLocus::Kind::Independent);
  CHECK(s.classification == BmtClass::ViolatedAtCharacterLevel);
  REQUIRE(s.violated_below.has_value());
  CHECK(*s.violated_below == Scalar(1));
}

TEST_CASE("svg output") {
  const auto found = destabilizer_scan(pc("1,0,0,0"), CharacterBox::symmetric(1));
  const auto svg = walls_svg(pc("1,0,0,0"), found);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("center 1, radius 1") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
