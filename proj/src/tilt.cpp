#include "tiltstab/tilt.hpp"

#include "tiltstab/errors.hpp"

namespace tiltstab::tilt {

TiltPoint::TiltPoint(Scalar alpha, Scalar beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.sign() <= 0) throw DomainError("tilt parameter alpha must be positive, got " + alpha_.str());
}

Slope mu_slope(const ProjectedChern& p, const Scalar& beta) {
  if (p.e0.is_zero()) return Slope::infinity();
  return Slope::finite(chern::twist(p, beta).e1 / Scalar(p.e0));
}

Scalar nu_numerator(const ProjectedChern& p, const TiltPoint& t) {
  const ProjectedChern tw = chern::twist(p, t.beta());
  return tw.e2 - Scalar(Rational(1, 2) * p.e0) * t.alpha_squared();
}

Slope nu_slope(const ProjectedChern& p, const TiltPoint& t) {
  const ProjectedChern tw = chern::twist(p, t.beta());
  if (tw.e1.is_zero()) return Slope::infinity();
  return Slope::finite(nu_numerator(p, t) / tw.e1);
}

CentralChargeValue central_charge(const ProjectedChern& p, const TiltPoint& t) {
  // Z = -integral e^{-i omega} ch^B with omega = alpha sqrt(3) H.
  const ProjectedChern tw = chern::twist(p, t.beta());
  const Scalar a2 = t.alpha_squared();
  return {-tw.e3 + Scalar(Rational(3, 2)) * a2 * tw.e1, t.alpha() * nu_numerator(p, t)};
}

Scalar bmt_surplus(const ProjectedChern& p, const TiltPoint& t) {
  const ProjectedChern tw = chern::twist(p, t.beta());
  return Scalar(Rational(1, 6)) * t.alpha_squared() * tw.e1 - tw.e3;
}

ReducedCheck reduced_check(const ProjectedChern& p) {
  ReducedCheck out;
  out.beta_bar = chern::beta_bar(p);
  out.value = chern::twist(p, out.beta_bar).e3;
  out.verdict = out.value.sign() <= 0;
  out.rank_nonnegative = p.e0.sign() >= 0;
  out.beta_bar_in_unit_interval = out.beta_bar.sign() >= 0 && (out.beta_bar - Scalar(1)).sign() < 0;
  return out;
}

std::string to_string(NuZeroLocus::Kind kind) {
  switch (kind) {
    case NuZeroLocus::Kind::Point: return "point";
    case NuZeroLocus::Kind::Independent: return "independent";
    case NuZeroLocus::Kind::Empty: return "empty";
  }
  return "?";
}

NuZeroLocus nu_zero_alpha(const ProjectedChern& p, const Scalar& beta) {
  const Scalar e2 = chern::twist(p, beta).e2;
  if (p.e0.is_zero()) {
    return {e2.is_zero() ? NuZeroLocus::Kind::Independent : NuZeroLocus::Kind::Empty, Scalar()};
  }
  const Scalar radicand = Scalar(Rational(2)) * e2 / Scalar(p.e0);
  // alpha = 0 is not a tilt point, so a zero radicand is an empty locus too.
  if (radicand.sign() <= 0) return {NuZeroLocus::Kind::Empty, Scalar()};
  if (!radicand.is_rational()) {
    throw DomainError("nu = 0 locus needs a rational alpha^2, got " + radicand.str());
  }
  return {NuZeroLocus::Kind::Point, quad_sqrt(radicand.as_rational())};
}

std::array<Polynomial, 4> twist_in_alpha(const ProjectedChern& p, const Polynomial& beta) {
  if (!p.is_rational()) throw DomainError("symbolic evaluation needs a rational character, got " + p.str());
  const Polynomial e0(p.e0);
  const Polynomial e1(p.e1.as_rational());
  const Polynomial e2(p.e2.as_rational());
  const Polynomial e3(p.e3.as_rational());
  const Polynomial b2 = beta * beta;
  const Polynomial half(Rational(1, 2));
  const Polynomial sixth(Rational(1, 6));
  return {e0, e1 - beta * e0, e2 - beta * e1 + half * b2 * e0, e3 - beta * e2 + half * b2 * e1 - sixth * b2 * beta * e0};
}

Polynomial nu_numerator_in_alpha(const ProjectedChern& p, const Polynomial& beta) {
  const auto tw = twist_in_alpha(p, beta);
  return tw[2] - Polynomial::monomial(Rational(1, 2) * p.e0, 2);
}

Polynomial nu_denominator_in_alpha(const ProjectedChern& p, const Polynomial& beta) {
  return twist_in_alpha(p, beta)[1];
}

Polynomial bmt_surplus_in_alpha(const ProjectedChern& p, const Polynomial& beta) {
  const auto tw = twist_in_alpha(p, beta);
  return Polynomial::monomial(Rational(1, 6), 2) * tw[1] - tw[3];
}

std::string to_string(ChargeConvention c) {
  return c == ChargeConvention::OmegaSqrt3 ? "omega_sqrt3" : "displayed_formula";
}

Polynomial central_charge_re_in_alpha(const ProjectedChern& p, const Polynomial& beta, ChargeConvention c) {
  const auto tw = twist_in_alpha(p, beta);
  const Rational k = c == ChargeConvention::OmegaSqrt3 ? Rational(3, 2) : Rational(1, 6);
  return Polynomial::monomial(k, 2) * tw[1] - tw[3];
}

}  // namespace tiltstab::tilt
