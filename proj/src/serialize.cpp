#include "tiltstab/serialize.hpp"

#include "tiltstab/errors.hpp"

namespace tiltstab::io {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const QuadraticNumber& x) {
  Json j;
  j["a"] = x.a().str();
  j["b"] = x.b().str();
  j["d"] = x.d();
  return j;
}

QuadraticNumber quadratic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d")) {
    throw ParseError("expected {\"a\",\"b\",\"d\"}, got " + j.dump());
  }
  return QuadraticNumber(rational_from_json(j["a"]), rational_from_json(j["b"]), j["d"].get<std::int64_t>());
}

Json scalar_to_json(const Scalar& x) { return x.is_rational() ? to_json(x.as_rational()) : to_json(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) return quadratic_from_json(j);
  return Scalar(rational_from_json(j));
}

Json to_json(const Polynomial& p) {
  Json j = Json::object();
  for (const auto& [deg, coeff] : p.coefficients()) j[std::to_string(deg)] = coeff.str();
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a polynomial object, got " + j.dump());
  Polynomial p;
  for (const auto& [deg, coeff] : j.items()) p += Polynomial::monomial(rational_from_json(coeff), std::stoi(deg));
  return p;
}

Json to_json(const geometry::ThreefoldModel& model, const geometry::DivisorClass& d) {
  Json j = Json::object();
  for (std::size_t i = 0; i < model.rank(); ++i) j[model.generators()[i]] = d[i].str();
  return j;
}

geometry::DivisorClass divisor_from_json(const geometry::ThreefoldModel& model, const Json& j) {
  if (!j.is_object()) throw ParseError("expected a divisor object, got " + j.dump());
  auto d = model.zero();
  for (const auto& [name, coeff] : j.items()) {
    const auto idx = model.index_of(name);
    if (!idx) throw ParseError("unknown generator '" + name + "' for model " + model.name());
    d[*idx] = rational_from_json(coeff);
  }
  return d;
}

Json to_json(const geometry::ThreefoldModel& model, const geometry::CohVector& v) {
  Json j;
  j["ch0"] = v.ch0.str();
  j["ch1"] = to_json(model, v.ch1);
  Json ch2 = Json::object();
  for (std::size_t i = 0; i < model.rank(); ++i) ch2[model.generators()[i]] = v.ch2.at(i).str();
  j["ch2_pairing"] = ch2;
  j["ch3"] = v.ch3.str();
  return j;
}

Json to_json(const chern::ProjectedChern& p) {
  return Json::array({to_json(p.e0), scalar_to_json(p.e1), scalar_to_json(p.e2), scalar_to_json(p.e3)});
}

chern::ProjectedChern projected_from_json(const Json& j) {
  if (j.is_string()) return chern::ProjectedChern::parse(j.get<std::string>());
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a 4-tuple, got " + j.dump());
  return {rational_from_json(j[0]), scalar_from_json(j[1]), scalar_from_json(j[2]), scalar_from_json(j[3])};
}

Json to_json(const tilt::Slope& s) {
  Json j;
  j["value"] = s.infinite ? Json(nullptr) : scalar_to_json(s.value);
  j["infinite"] = s.infinite;
  return j;
}

Json to_json(const ConvergentList& list) {
  Json j;
  Json conv = Json::array();
  for (const auto& c : list.convergents) conv.push_back(Json::array({c.p.get_str(), c.q.get_str()}));
  j["convergents"] = conv;
  Json pq = Json::array();
  for (const auto& a : list.partial_quotients) pq.push_back(a.get_str());
  j["partial_quotients"] = pq;
  j["terminated"] = list.terminated;
  return j;
}

Json to_json(const frobenius::FrobeniusDecomposition& d) {
  Json j;
  j["Y"] = geometry::to_string(d.surface);
  j["m"] = d.m;
  j["source"] = d.source;
  Json summands = Json::array();
  for (const auto& s : d.summands) summands.push_back({{"divisor", s.divisor}, {"multiplicity", s.multiplicity}});
  j["summands"] = summands;
  j["rank"] = d.rank();
  return j;
}

Json to_json(const geometry::ThreefoldModel& model, const frobenius::PushforwardDecomposition& d) {
  Json j;
  j["a"] = d.a;
  j["source"] = to_json(model, d.source);
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    summands.push_back({{"divisor", to_json(model, s.divisor)}, {"multiplicity", s.multiplicity}});
  }
  j["summands"] = summands;
  j["rank"] = d.rank();
  return j;
}

Json to_json(const geometry::ThreefoldModel& model, const frobenius::VanishingReport& report) {
  Json j;
  j["case"] = frobenius::to_string(report.vanishing_case);
  j["model"] = model.name();
  Json params;
  const auto& p = report.params;
  const bool irrational = report.vanishing_case == frobenius::VanishingCase::HomIrrational ||
                          report.vanishing_case == frobenius::VanishingCase::Ext2Irrational;
  if (!irrational) params["m"] = p.m;
  if (report.vanishing_case != frobenius::VanishingCase::HomIntegral &&
      report.vanishing_case != frobenius::VanishingCase::Ext2Integral) {
    params["p"] = p.p;
    params["q"] = p.q;
  }
  if (irrational) {
    params["u"] = p.u;
    params["v"] = p.v;
    if (p.beta_bar) params["beta_bar"] = scalar_to_json(*p.beta_bar);
  }
  j["params"] = params;
  j["polarization"] = to_json(model, report.polarization);
  j["residues_checked"] = report.residues_checked;
  j["tuples_covered"] = report.tuples_covered;
  j["line_bundle_hypothesis"] = report.line_bundle_hypothesis;
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"a_sums", f.a_sums}, {"b_sums", f.b_sums}, {"class", to_json(model, f.offending)},
                        {"reason", f.reason}});
  }
  j["failures"] = failures;
  j["passed"] = report.passed();
  return j;
}

Json to_json(const walls::Wall& w) {
  Json j;
  j["kind"] = walls::to_string(w.kind);
  if (w.is_wall()) j["center"] = scalar_to_json(w.center);
  if (w.kind == walls::WallKind::Semicircle) {
    j["radius_squared"] = scalar_to_json(w.radius_squared);
    j["radius"] = scalar_to_json(w.radius);
  }
  j["v"] = to_json(w.first);
  j["w"] = to_json(w.second);
  return j;
}

Json to_json(const geometry::ThreefoldModel& model, const walls::CounterexampleCertificate& c) {
  Json j;
  j["s"] = to_json(c.s);
  j["m"] = c.m;
  j["polarization"] = to_json(model, c.polarization);
  j["H_cubed"] = to_json(geometry::intersect3(model, c.polarization, c.polarization, c.polarization));
  j["projected"] = to_json(c.projected);
  j["projected_matches"] = c.projected_matches;
  j["twisted_beta1"] = to_json(c.twisted);
  j["twisted_matches"] = c.twisted_matches;
  j["nu_numerator_beta1"] = to_json(c.nu_numerator_at_beta1);
  j["nu_vanishes_identically"] = c.nu_vanishes_identically;
  j["nu_at_beta1"] = scalar_to_json(c.nu_at_beta1);
  j["wall_center"] = scalar_to_json(c.center);
  j["radius_bound"] = to_json(c.radius_bound);
  j["re_z_shift_omega_sqrt3"] = to_json(c.re_z_omega_sqrt3);
  j["re_z_shift_displayed_formula"] = to_json(c.re_z_displayed_formula);
  j["bmt_surplus_beta1"] = to_json(c.bmt_surplus_at_beta1);
  j["rez_thresholds"] = {{"omega_sqrt3", scalar_to_json(c.thresholds.omega_sqrt3)},
                         {"displayed_formula", scalar_to_json(c.thresholds.displayed_formula)},
                         {"discrepancy", c.thresholds.discrepancy()}};
  j["window"] = {{"lower", to_json(c.radius_bound)},
                 {"upper", scalar_to_json(c.thresholds.conservative())},
                 {"nonempty", c.window_nonempty}};
  j["window_displayed"] = {{"lower", to_json(c.radius_bound)},
                          {"upper", scalar_to_json(c.thresholds.displayed_formula)},
                          {"nonempty", c.window_nonempty_displayed}};
  return j;
}

Json to_json(const geometry::ThreefoldModel& model, const walls::BmtReport& r) {
  Json chars = Json::array();
  for (const auto& c : r.characters) {
    Json samples = Json::array();
    for (const auto& s : c.samples) {
      Json js;
      js["beta"] = to_json(s.beta);
      js["locus"] = tilt::to_string(s.locus);
      if (s.locus == tilt::NuZeroLocus::Kind::Point) {
        js["alpha"] = scalar_to_json(s.alpha);
        js["surplus"] = scalar_to_json(s.surplus);
      } else if (s.locus == tilt::NuZeroLocus::Kind::Independent) {
        js["surplus_in_alpha"] = to_json(s.surplus_in_alpha);
        if (s.violated_below) js["violated_for_alpha_below"] = scalar_to_json(*s.violated_below);
      }
      js["class"] = walls::to_string(s.classification);
      samples.push_back(js);
    }
    chars.push_back({{"character", to_json(model, c.character)},
                     {"projected", to_json(c.projected)},
                     {"overall", walls::to_string(c.overall)},
                     {"samples", samples}});
  }
  Json j;
  j["characters"] = chars;
  j["note"] = walls::BmtReport::note;
  return j;
}

}  // namespace tiltstab::io
