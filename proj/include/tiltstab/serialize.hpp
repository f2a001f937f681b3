#pragma once

// JSON forms of the exact types. Rationals are strings "p/q" (or "p"),
// quadratic numbers are {"a": "p/q", "b": "p/q", "d": int}, polynomials map
// degree strings to coefficient strings, divisors map generator names to
// coefficient strings. Every encoder has a decoder that round-trips exactly.

#include <json.hpp>

#include "tiltstab/chern.hpp"
#include "tiltstab/continued_fraction.hpp"
#include "tiltstab/frobenius.hpp"
#include "tiltstab/geometry.hpp"
#include "tiltstab/polynomial.hpp"
#include "tiltstab/tilt.hpp"
#include "tiltstab/walls.hpp"

namespace tiltstab::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const QuadraticNumber& x);
QuadraticNumber quadratic_from_json(const Json& j);

/// Rational scalars as strings, irrational ones as {"a","b","d"}.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const geometry::ThreefoldModel& model, const geometry::DivisorClass& d);
geometry::DivisorClass divisor_from_json(const geometry::ThreefoldModel& model, const Json& j);

Json to_json(const geometry::ThreefoldModel& model, const geometry::CohVector& v);

Json to_json(const chern::ProjectedChern& p);
chern::ProjectedChern projected_from_json(const Json& j);

Json to_json(const tilt::Slope& s);
Json to_json(const ConvergentList& list);

Json to_json(const frobenius::FrobeniusDecomposition& d);
Json to_json(const geometry::ThreefoldModel& model, const frobenius::PushforwardDecomposition& d);
Json to_json(const geometry::ThreefoldModel& model, const frobenius::VanishingReport& report);

Json to_json(const walls::Wall& w);
Json to_json(const geometry::ThreefoldModel& model, const walls::CounterexampleCertificate& c);
Json to_json(const geometry::ThreefoldModel& model, const walls::BmtReport& r);

}  // namespace tiltstab::io
