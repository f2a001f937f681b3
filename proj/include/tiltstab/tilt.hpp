#pragma once

#include <array>
#include <compare>
#include <string>

#include "tiltstab/chern.hpp"
#include "tiltstab/polynomial.hpp"

namespace tiltstab::tilt {

using chern::ProjectedChern;

/// A point (alpha, beta) of the upper half plane, omega = alpha sqrt(3) H,
/// B = beta H. alpha and beta must share a radicand when both irrational.
class TiltPoint {
 public:
  TiltPoint(Scalar alpha, Scalar beta);
  const Scalar& alpha() const { return alpha_; }
  const Scalar& beta() const { return beta_; }
  Scalar alpha_squared() const { return alpha_ * alpha_; }

 private:
  Scalar alpha_;
  Scalar beta_;
};

/// Value in (-inf, +inf]; +inf compares above every finite value.
struct Slope {
  bool infinite = false;
  Scalar value;

  static Slope infinity() { return {true, Scalar()}; }
  static Slope finite(Scalar v) { return {false, std::move(v)}; }
  std::string str() const { return infinite ? "+inf" : value.str(); }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.infinite || b.infinite) return static_cast<int>(a.infinite) <=> static_cast<int>(b.infinite);
    return a.value <=> b.value;
  }
};

/// Z = re + i sqrt(3) im_over_sqrt3. sqrt(3) is kept symbolic so both parts
/// stay exact; sign(im) = sign(im_over_sqrt3).
struct CentralChargeValue {
  Scalar re;
  Scalar im_over_sqrt3;
  int im_sign() const { return im_over_sqrt3.sign(); }
};

Slope mu_slope(const ProjectedChern& p, const Scalar& beta);
Slope nu_slope(const ProjectedChern& p, const TiltPoint& t);
/// H ch2^beta - alpha^2/2 H^3 ch0^beta
Scalar nu_numerator(const ProjectedChern& p, const TiltPoint& t);
CentralChargeValue central_charge(const ProjectedChern& p, const TiltPoint& t);
/// alpha^2/6 H^2 ch1^beta - ch3^beta; the BMT inequality asserts >= 0.
Scalar bmt_surplus(const ProjectedChern& p, const TiltPoint& t);

struct ReducedCheck {
  bool verdict = false;  // ch3^{beta-bar} <= 0
  QuadraticNumber value;
  QuadraticNumber beta_bar;
  // Hypotheses of the reduction, reported rather than enforced.
  bool rank_nonnegative = false;
  bool beta_bar_in_unit_interval = false;
};

ReducedCheck reduced_check(const ProjectedChern& p);

struct NuZeroLocus {
  enum class Kind { Point, Independent, Empty };
  Kind kind = Kind::Empty;
  Scalar alpha;  // set when kind == Point
};

std::string to_string(NuZeroLocus::Kind kind);

/// The alpha > 0 with nu_{alpha,beta}(p) = 0 at fixed beta.
NuZeroLocus nu_zero_alpha(const ProjectedChern& p, const Scalar& beta);

// --- symbolic in alpha ------------------------------------------------------
// beta is given as a polynomial in alpha (constant, or c - alpha on the nu = 0
// locus of a line bundle); p must be rational.

std::array<Polynomial, 4> twist_in_alpha(const ProjectedChern& p, const Polynomial& beta);
Polynomial nu_numerator_in_alpha(const ProjectedChern& p, const Polynomial& beta);
Polynomial nu_denominator_in_alpha(const ProjectedChern& p, const Polynomial& beta);
Polynomial bmt_surplus_in_alpha(const ProjectedChern& p, const Polynomial& beta);

enum class ChargeConvention {
  /// omega = alpha sqrt(3) H: Re Z = -ch3^beta + (3/2) alpha^2 H^2 ch1^beta.
  OmegaSqrt3,
  /// The form Re Z = -ch3^beta + (1/6) alpha^2 H^2 ch1^beta, which reproduces
  /// the closed form (3/8)(1 - alpha^2) quoted for O_D[1] at beta = 1.
  DisplayedFormula,
};

std::string to_string(ChargeConvention c);
Polynomial central_charge_re_in_alpha(const ProjectedChern& p, const Polynomial& beta, ChargeConvention c);

}  // namespace tiltstab::tilt
