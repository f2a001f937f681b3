#pragma once

#include <iosfwd>
#include <string>

#include "tiltstab/geometry.hpp"
#include "tiltstab/quadratic.hpp"

namespace tiltstab::chern {

/// H-projection (H^3 ch0, H^2 ch1, H ch2, ch3) of a Chern character.
/// Entries other than e0 may live in Q(sqrt d) after an irrational twist.
struct ProjectedChern {
  Rational e0;
  Scalar e1;
  Scalar e2;
  Scalar e3;

  bool is_rational() const { return e1.is_rational() && e2.is_rational() && e3.is_rational(); }
  bool is_zero() const { return e0.is_zero() && e1.is_zero() && e2.is_zero() && e3.is_zero(); }

  ProjectedChern operator-() const { return {-e0, -e1, -e2, -e3}; }
  friend ProjectedChern operator+(const ProjectedChern& a, const ProjectedChern& b) {
    return {a.e0 + b.e0, a.e1 + b.e1, a.e2 + b.e2, a.e3 + b.e3};
  }
  friend ProjectedChern operator-(const ProjectedChern& a, const ProjectedChern& b) { return a + (-b); }
  friend ProjectedChern operator*(const Rational& k, const ProjectedChern& p) {
    return {k * p.e0, Scalar(k) * p.e1, Scalar(k) * p.e2, Scalar(k) * p.e3};
  }
  friend bool operator==(const ProjectedChern&, const ProjectedChern&) = default;

  /// "e0,e1,e2,e3"
  std::string str() const;
  /// Parses "e0,e1,e2,e3"; entries are exact scalars ("p/q" or "a+b*sqrt(d)").
  static ProjectedChern parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const ProjectedChern& p);

/// Requires H ample; throws PreconditionError otherwise.
ProjectedChern project(const geometry::ThreefoldModel& model, const geometry::DivisorClass& polarization,
                       const geometry::CohVector& v);

/// ch^beta = e^{-beta H} ch, in projected form.
ProjectedChern twist(const ProjectedChern& p, const Scalar& beta);

/// (H^2 ch1)^2 - 2 (H^3 ch0)(H ch2); twist invariant.
Scalar delta_bar(const ProjectedChern& p);

/// The twist at which H ch2^beta vanishes: the smaller root (e1 - sqrt(delta))/e0
/// when e0 != 0, e2/e1 when e0 = 0.
QuadraticNumber beta_bar(const ProjectedChern& p);

}  // namespace tiltstab::chern
