#pragma once

// Random inputs and hand-written oracles shared by the test binaries.

#include <random>
#include <vector>

#include "tiltstab/chern.hpp"
#include "tiltstab/geometry.hpp"
#include "tiltstab/quadratic.hpp"

namespace support {

using tiltstab::QuadraticNumber;
using tiltstab::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611ULL);
  return gen;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

/// p/q with |p| <= num_bound, 1 <= q <= den_bound.
inline Rational random_rational(long long num_bound = 12, long long den_bound = 6) {
  return Rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

inline Rational random_nonzero_rational(long long num_bound = 12, long long den_bound = 6) {
  Rational r;
  do r = random_rational(num_bound, den_bound);
  while (r.is_zero());
  return r;
}

inline QuadraticNumber random_quadratic(std::int64_t d) {
  return QuadraticNumber(random_rational(), random_rational(), d);
}

inline tiltstab::chern::ProjectedChern random_projected() {
  return {random_rational(), random_rational(), random_rational(), random_rational()};
}

inline tiltstab::geometry::DivisorClass random_divisor(const tiltstab::geometry::ThreefoldModel& model,
                                                       long long bound = 4) {
  auto d = model.zero();
  for (std::size_t i = 0; i < model.rank(); ++i) d[i] = random_rational(bound, 3);
  return d;
}

inline tiltstab::geometry::DivisorClass random_integral_divisor(const tiltstab::geometry::ThreefoldModel& model,
                                                                long long bound = 3) {
  auto d = model.zero();
  for (std::size_t i = 0; i < model.rank(); ++i) d[i] = Rational(uniform(-bound, bound));
  return d;
}

/// Random character: rational combination of line-bundle characters plus
/// a point, so ch2 is an honest pairing functional.
inline tiltstab::geometry::CohVector random_character(const tiltstab::geometry::ThreefoldModel& model) {
  using namespace tiltstab::geometry;
  CohVector v = zero_character(model);
  for (int k = 0; k < 3; ++k) {
    CohVector term = chern_of_line_bundle(model, random_integral_divisor(model));
    const Rational c = random_rational(3, 2);
    term.ch0 *= c;
    term.ch1 *= c;
    for (auto& x : term.ch2) x *= c;
    term.ch3 *= c;
    v += term;
  }
  CohVector pt = point_class(model);
  pt.ch3 *= random_rational();
  return v + pt;
}

inline std::vector<tiltstab::geometry::ThreefoldModel> product_models() {
  using tiltstab::geometry::ThreefoldModel;
  return {ThreefoldModel::p1_x_abelian_surface(1), ThreefoldModel::p2_x_elliptic_curve(),
          ThreefoldModel::p1_x_p1_x_elliptic_curve()};
}

/// Riemann-Roch on the toric surface from its own intersection form,
/// independent of the closed forms in the library:
///   P1: chi = 1 + deg D
///   surfaces: chi = 1 + D.(D - K)/2
inline Rational toric_chi_oracle(tiltstab::geometry::ToricSurface y, const std::vector<long long>& d) {
  using tiltstab::geometry::ToricSurface;
  switch (y) {
    case ToricSurface::P1: return Rational(1 + d[0]);
    case ToricSurface::P2: {
      const long long a = d[0];
      return Rational(1) + Rational(a * (a + 3), 2);  // K = -3H, H^2 = 1
    }
    case ToricSurface::P1xP1: {
      // D = (a, b), K = (-2, -2), (x, y).(z, w) = xw + yz
      const long long a = d[0], b = d[1];
      const long long dd = 2 * a * b;
      const long long dk = -2 * a - 2 * b;
      return Rational(1) + Rational(dd - dk, 2);
    }
  }
  return Rational(0);
}

}  // namespace support
