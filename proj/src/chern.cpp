#include "tiltstab/chern.hpp"

#include <ostream>
#include <vector>

#include "tiltstab/errors.hpp"

namespace tiltstab::chern {

std::string ProjectedChern::str() const {
  return e0.str() + "," + e1.str() + "," + e2.str() + "," + e3.str();
}

ProjectedChern ProjectedChern::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 4) {
    throw ParseError("character '" + std::string(text) + "' must have four comma-separated entries");
  }
  const QuadraticNumber e0 = QuadraticNumber::parse(parts[0]);
  if (!e0.is_rational()) throw ParseError("H^3 ch0 must be rational in '" + std::string(text) + "'");
  return {e0.as_rational(), QuadraticNumber::parse(parts[1]), QuadraticNumber::parse(parts[2]),
          QuadraticNumber::parse(parts[3])};
}

std::ostream& operator<<(std::ostream& os, const ProjectedChern& p) { return os << "(" << p.str() << ")"; }

ProjectedChern project(const geometry::ThreefoldModel& model, const geometry::DivisorClass& polarization,
                       const geometry::CohVector& v) {
  if (!geometry::is_ample(model, polarization)) {
    throw PreconditionError("polarization " + geometry::format_divisor(model, polarization) + " is not ample");
  }
  const auto& h = polarization;
  return {geometry::intersect3(model, h, h, h) * v.ch0, Scalar(geometry::intersect3(model, h, h, v.ch1)),
          Scalar(geometry::pair(v.ch2, h)), Scalar(v.ch3)};
}

ProjectedChern twist(const ProjectedChern& p, const Scalar& beta) {
  const Scalar e0(p.e0);
  const Scalar beta2 = beta * beta;
  const Scalar half(Rational(1, 2));
  const Scalar sixth(Rational(1, 6));
  return {p.e0, p.e1 - beta * e0, p.e2 - beta * p.e1 + half * beta2 * e0,
          p.e3 - beta * p.e2 + half * beta2 * p.e1 - sixth * beta2 * beta * e0};
}

Scalar delta_bar(const ProjectedChern& p) { return p.e1 * p.e1 - Scalar(Rational(2) * p.e0) * p.e2; }

QuadraticNumber beta_bar(const ProjectedChern& p) {
  if (p.e0.is_zero()) {
    if (p.e1.is_zero()) throw DomainError("beta-bar undefined for this character (H^3 ch0 = H^2 ch1 = 0)");
    return p.e2 / p.e1;
  }
  const Scalar delta = delta_bar(p);
  if (delta.sign() < 0) throw DomainError("beta-bar needs a non-negative discriminant, got " + delta.str());
  if (!delta.is_rational()) throw DomainError("beta-bar needs a rational discriminant, got " + delta.str());
  return (p.e1 - quad_sqrt(delta.as_rational())) / Scalar(p.e0);
}

}  // namespace tiltstab::chern
