#include "tiltstab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "tiltstab/errors.hpp"
#include "tiltstab/serialize.hpp"

namespace tiltstab::cli {

namespace {

using io::Json;
using geometry::CohVector;
using geometry::DivisorClass;
using geometry::ThreefoldModel;

struct Options {
  // model and character
  std::string model = "P2xC";
  std::string d, s, polarization, character, line;
  bool plane = false;
  bool point = false;
  std::string alpha, beta;
  // output
  bool json = false;
  std::string format;
  std::string config;
  long long seed = 0;
  bool timing = false;
  std::string svg;
  // thomsen / verify / counterexample
  std::optional<long long> m;
  std::string toric, divisor;
  std::string vanishing_case = "hom_integral";
  long long p = 0, q = 1, u = 0, v = 0;
  std::string beta_bar;
  int threads = 0;
  bool no_enforce = false;
  // dirichlet
  std::string x;
  std::size_t n = 10;
  // walls
  std::string with, box;
  long long bound = 2, den = 1;
  // scan
  std::vector<std::string> lines;
  std::string multiples, betas;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

// --- config file: keys mirror flag names; flags on the command line win ----

bool flag_present(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

std::string config_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  Json config;
  try {
    config = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!config.is_object()) throw ParseError("config file must hold a JSON object");
  std::vector<std::string> extra;
  auto add = [&](const std::string& key, const Json& value) {
    const std::string flag = "--" + key;
    if (flag_present(args, flag)) return;
    if (value.is_boolean()) {
      if (value.get<bool>()) extra.push_back(flag);
    } else if (value.is_array()) {
      for (const auto& item : value) {
        extra.push_back(flag);
        extra.push_back(config_value(item));
      }
    } else {
      extra.push_back(flag);
      extra.push_back(config_value(value));
    }
  };
  for (const auto& [key, value] : config.items()) {
    if (key == "command") continue;
    if (key == "model" && value.is_object()) {
      if (value.contains("kind")) add("model", value["kind"]);
      if (value.contains("d")) add("d", value["d"]);
      if (value.contains("s")) add("s", value["s"]);
      continue;
    }
    add(key, value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

// --- input helpers -----------------------------------------------------------

ThreefoldModel load_model(const Options& o) {
  std::optional<Rational> param;
  if (!o.d.empty()) param = Rational::parse(o.d);
  if (!o.s.empty()) param = Rational::parse(o.s);
  return geometry::make_model(o.model, param);
}

DivisorClass load_polarization(const ThreefoldModel& model, const Options& o) {
  DivisorClass h;
  if (!o.polarization.empty()) {
    h = geometry::parse_divisor(model, o.polarization);
  } else if (model.is_product()) {
    h = model.sum_of_generators();
  } else {
    h = Rational(o.m.value_or(2)) * model.generator("L") - Rational(1, 2) * model.generator("D");
  }
  if (!geometry::is_ample(model, h)) {
    throw PreconditionError("polarization " + geometry::format_divisor(model, h) + " is not ample on " + model.name());
  }
  return h;
}

std::optional<CohVector> load_coh_vector(const ThreefoldModel& model, const Options& o) {
  if (!o.line.empty()) return geometry::chern_of_line_bundle(model, geometry::parse_divisor(model, o.line));
  if (o.plane) return geometry::structure_sheaf_of_plane(model);
  if (o.point) return geometry::point_class(model);
  return std::nullopt;
}

struct CharacterInput {
  ThreefoldModel model;
  DivisorClass polarization;
  std::optional<CohVector> full;
  chern::ProjectedChern projected;
};

CharacterInput load_character(const Options& o, bool require_nonzero) {
  auto model = load_model(o);
  auto h = load_polarization(model, o);
  CharacterInput in{std::move(model), std::move(h), std::nullopt, {}};
  if (!o.character.empty()) {
    in.projected = chern::ProjectedChern::parse(o.character);
  } else if (auto v = load_coh_vector(in.model, o)) {
    in.full = *v;
    in.projected = chern::project(in.model, in.polarization, *v);
  } else {
    throw PreconditionError("a character is required: give --char, --line, --plane or --point");
  }
  if (require_nonzero && in.projected.is_zero()) throw PreconditionError("character must be nonzero");
  return in;
}

Scalar required_scalar(const std::string& text, const char* name) {
  if (text.empty()) throw PreconditionError(std::string("--") + name + " is required");
  return Scalar::parse(text);
}

Json model_header(const CharacterInput& in) {
  Json j;
  j["model"] = in.model.name();
  if (!in.model.parameter().is_zero()) j["parameter"] = io::to_json(in.model.parameter());
  j["polarization"] = io::to_json(in.model, in.polarization);
  if (in.full) j["character"] = io::to_json(in.model, *in.full);
  j["projected"] = io::to_json(in.projected);
  return j;
}

// --- commands ----------------------------------------------------------------

struct Result {
  Json body;
  int code = kOk;
  std::string csv;  // filled by commands with a tabular form
  std::string svg;
};

Result cmd_chern(const Options& o) {
  const auto in = load_character(o, false);
  Result r;
  r.body = model_header(in);
  if (!o.beta.empty()) r.body["twisted"] = io::to_json(chern::twist(in.projected, Scalar::parse(o.beta)));
  r.body["delta_bar"] = io::scalar_to_json(chern::delta_bar(in.projected));
  try {
    r.body["beta_bar"] = io::scalar_to_json(chern::beta_bar(in.projected));
  } catch (const std::exception& e) {
    r.body["beta_bar"] = nullptr;
    r.body["beta_bar_error"] = e.what();
  }
  return r;
}

Result cmd_slope(const Options& o) {
  const auto in = load_character(o, true);
  const Scalar beta = o.beta.empty() ? Scalar() : Scalar::parse(o.beta);
  Result r;
  r.body = model_header(in);
  r.body["beta"] = io::scalar_to_json(beta);
  r.body["mu"] = io::to_json(tilt::mu_slope(in.projected, beta));
  if (!o.alpha.empty()) {
    r.body["alpha"] = io::scalar_to_json(Scalar::parse(o.alpha));
    r.body["nu"] = io::to_json(tilt::nu_slope(in.projected, tilt::TiltPoint(Scalar::parse(o.alpha), beta)));
  }
  return r;
}

Result cmd_nu(const Options& o) {
  const auto in = load_character(o, true);
  const tilt::TiltPoint t(required_scalar(o.alpha, "alpha"), required_scalar(o.beta, "beta"));
  const auto s = tilt::nu_slope(in.projected, t);
  Result r;
  r.body = io::to_json(s);
  r.body["numerator"] = io::scalar_to_json(tilt::nu_numerator(in.projected, t));
  return r;
}

Result cmd_charge(const Options& o) {
  const auto in = load_character(o, true);
  const tilt::TiltPoint t(required_scalar(o.alpha, "alpha"), required_scalar(o.beta, "beta"));
  const auto z = tilt::central_charge(in.projected, t);
  const auto tw = chern::twist(in.projected, t.beta());
  Result r;
  r.body = model_header(in);
  r.body["alpha"] = io::scalar_to_json(t.alpha());
  r.body["beta"] = io::scalar_to_json(t.beta());
  r.body["re"] = io::scalar_to_json(z.re);
  r.body["im_over_sqrt3"] = io::scalar_to_json(z.im_over_sqrt3);
  r.body["re_displayed_formula"] =
      io::scalar_to_json(-tw.e3 + Scalar(Rational(1, 6)) * t.alpha_squared() * tw.e1);
  return r;
}

Result cmd_bmt(const Options& o) {
  const auto in = load_character(o, true);
  const Scalar beta = required_scalar(o.beta, "beta");
  Result r;
  r.body = model_header(in);
  r.body["beta"] = io::scalar_to_json(beta);
  if (!o.alpha.empty()) {
    const tilt::TiltPoint t(Scalar::parse(o.alpha), beta);
    const Scalar surplus = tilt::bmt_surplus(in.projected, t);
    r.body["alpha"] = io::scalar_to_json(t.alpha());
    r.body["surplus"] = io::scalar_to_json(surplus);
    r.body["nu_numerator"] = io::scalar_to_json(tilt::nu_numerator(in.projected, t));
    r.body["inequality_holds"] = surplus.sign() >= 0;
  }
  const auto locus = tilt::nu_zero_alpha(in.projected, beta);
  Json l;
  l["kind"] = tilt::to_string(locus.kind);
  if (locus.kind == tilt::NuZeroLocus::Kind::Point) {
    l["alpha"] = io::scalar_to_json(locus.alpha);
    l["surplus"] = io::scalar_to_json(tilt::bmt_surplus(in.projected, tilt::TiltPoint(locus.alpha, beta)));
  } else if (locus.kind == tilt::NuZeroLocus::Kind::Independent && beta.is_rational()) {
    l["surplus_in_alpha"] = io::to_json(tilt::bmt_surplus_in_alpha(in.projected, Polynomial(beta.as_rational())));
  }
  r.body["nu_zero_locus"] = l;
  return r;
}

Result cmd_reduce(const Options& o) {
  const auto in = load_character(o, true);
  const auto c = tilt::reduced_check(in.projected);
  Result r;
  r.body = model_header(in);
  r.body["beta_bar"] = io::scalar_to_json(c.beta_bar);
  r.body["ch3_at_beta_bar"] = io::scalar_to_json(c.value);
  r.body["verdict"] = c.verdict;
  r.body["rank_nonnegative"] = c.rank_nonnegative;
  r.body["beta_bar_in_unit_interval"] = c.beta_bar_in_unit_interval;
  return r;
}

std::vector<long long> parse_integer_list(const std::string& text) {
  std::vector<long long> out;
  for (const auto& part : split(text, ',')) {
    const Rational r = Rational::parse(part);
    if (!r.is_integer()) throw ParseError("expected an integer, got '" + part + "'");
    out.push_back(r.to_int64());
  }
  return out;
}

Result cmd_thomsen(const Options& o) {
  const long long m = o.m.value_or(2);
  Result r;
  if (!o.toric.empty()) {
    const auto y = geometry::parse_toric_surface(o.toric);
    const auto data = geometry::toric_factor_data(y);
    const auto d = o.divisor.empty() ? std::vector<long long>(data.coordinates(), 0) : parse_integer_list(o.divisor);
    const auto dec = frobenius::thomsen_decompose(y, d, m);
    r.body = io::to_json(dec);
    std::ostringstream csv;
    csv << "divisor,multiplicity\n";
    for (const auto& s : dec.summands) {
      csv << '"';
      for (std::size_t i = 0; i < s.divisor.size(); ++i) csv << (i ? "," : "") << s.divisor[i];
      csv << "\"," << s.multiplicity << '\n';
    }
    r.csv = csv.str();
    return r;
  }
  const auto model = load_model(o);
  const DivisorClass d = o.line.empty() ? model.zero() : geometry::parse_divisor(model, o.line);
  const auto dec = frobenius::pushforward_line_bundle(model, m, d);
  r.body = io::to_json(model, dec);
  r.body["model"] = model.name();
  std::ostringstream csv;
  csv << "divisor,multiplicity\n";
  for (const auto& s : dec.summands) csv << '"' << geometry::format_divisor(model, s.divisor) << "\"," << s.multiplicity << '\n';
  r.csv = csv.str();
  return r;
}

Result cmd_verify(const Options& o) {
  const auto model = load_model(o);
  frobenius::VanishingParams params;
  params.m = o.m.value_or(1);
  params.p = o.p;
  params.q = o.q;
  params.u = o.u;
  params.v = o.v;
  if (!o.beta_bar.empty()) params.beta_bar = Scalar::parse(o.beta_bar);
  if (!o.polarization.empty()) params.polarization = load_polarization(model, o);
  frobenius::VerifyOptions options;
  options.enforce_hypotheses = !o.no_enforce;
  options.threads = o.threads;
  const auto report =
      frobenius::verify_vanishing(model, frobenius::parse_vanishing_case(o.vanishing_case), params, options);
  Result r;
  r.body = io::to_json(model, report);
  r.code = report.passed() ? kOk : kVerificationFailed;
  std::ostringstream csv;
  csv << "a_sums,b_sums,class,reason\n";
  for (const auto& f : report.failures) {
    auto join = [](const std::vector<long long>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
      return s;
    };
    csv << join(f.a_sums) << ',' << join(f.b_sums) << ",\"" << geometry::format_divisor(model, f.offending) << "\",\""
        << f.reason << "\"\n";
  }
  r.csv = csv.str();
  return r;
}

Result cmd_euler_poly(const Options& o) {
  const auto model = load_model(o);
  const auto v = load_coh_vector(model, o);
  if (!v) throw PreconditionError("euler-poly needs --line, --plane or --point");
  const auto poly = geometry::euler_polynomial(model, *v);
  Result r;
  r.body["model"] = model.name();
  r.body["character"] = io::to_json(model, *v);
  r.body["polynomial"] = io::to_json(poly);
  r.body["polynomial_text"] = poly.str("m");
  r.body["euler_characteristic"] = io::to_json(geometry::euler_char(model, *v));
  r.body["leading_equals_ch3"] = poly.coefficient(6) == v->ch3;
  return r;
}

walls::CharacterBox parse_box(const Options& o) {
  walls::CharacterBox box = walls::CharacterBox::symmetric(o.bound, o.den);
  if (o.box.empty()) return box;
  const auto parts = split(o.box, ',');
  if (parts.size() != 3) throw ParseError("--box expects three ranges lo:hi for e0, e1, e2");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto ends = split(parts[i], ':');
    if (ends.size() != 2) throw ParseError("malformed range '" + parts[i] + "' (expected lo:hi)");
    box.lower[i] = Rational::parse(ends[0]);
    box.upper[i] = Rational::parse(ends[1]);
  }
  return box;
}

Result cmd_walls(const Options& o) {
  const auto in = load_character(o, true);
  Result r;
  r.body = model_header(in);
  if (!o.with.empty()) {
    const auto wall = walls::wall_between(in.projected, chern::ProjectedChern::parse(o.with));
    r.body["wall"] = io::to_json(wall);
    r.svg = walls::walls_svg(in.projected, wall.is_wall() ? std::vector<walls::Wall>{wall} : std::vector<walls::Wall>{});
    return r;
  }
  const auto box = parse_box(o);
  walls::ScanOptions options;
  options.threads = o.threads;
  const auto found = walls::destabilizer_scan(in.projected, box, options);
  Json jb;
  for (std::size_t i = 0; i < 3; ++i) {
    jb["e" + std::to_string(i)] = {io::to_json(box.lower[i]), io::to_json(box.upper[i])};
  }
  jb["max_denominator"] = box.max_denominator;
  r.body["box"] = jb;
  Json list = Json::array();
  std::ostringstream csv;
  csv << "kind,center,radius_squared,w\n";
  for (const auto& w : found) {
    list.push_back(io::to_json(w));
    csv << walls::to_string(w.kind) << ',' << w.center.str() << ','
        << (w.kind == walls::WallKind::Semicircle ? w.radius_squared.str() : "") << ",\"" << w.second.str() << "\"\n";
  }
  r.body["walls"] = list;
  r.body["count"] = found.size();
  r.csv = csv.str();
  r.svg = walls::walls_svg(in.projected, found);
  return r;
}

Result cmd_counterexample(const Options& o) {
  const Rational s = o.s.empty() ? Rational(2) : Rational::parse(o.s);
  const long long m = o.m.value_or(2);
  const auto cert = walls::counterexample_certificate(s, m);
  const auto cy = geometry::ThreefoldModel::cy3_with_plane(s);
  Result r;
  r.body = io::to_json(cy, cert);
  const bool ok = cert.projected_matches && cert.twisted_matches && cert.nu_vanishes_identically && cert.window_nonempty;
  r.body["certified"] = ok;
  r.code = ok ? kOk : kVerificationFailed;
  return r;
}

Result cmd_dirichlet(const Options& o) {
  Scalar x;
  Result r;
  if (!o.x.empty()) {
    x = Scalar::parse(o.x);
  } else {
    const auto in = load_character(o, true);
    r.body = model_header(in);
    x = chern::beta_bar(in.projected);
  }
  r.body["x"] = io::scalar_to_json(x);
  const auto list = dirichlet_convergents(x, o.n);
  const Json conv = io::to_json(list);
  for (const auto& [k, v] : conv.items()) r.body[k] = v;
  bool all = true;
  for (const auto& c : list.convergents) {
    if (!list.terminated && !satisfies_dirichlet_bound(x, c)) all = false;
  }
  r.body["dirichlet_bound_holds"] = all;
  r.code = all ? kOk : kVerificationFailed;
  return r;
}

std::vector<Rational> parse_betas(const std::string& text) {
  if (text.empty()) return {};
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParseError("--betas expects lo:hi:step or a comma list");
    const Rational lo = Rational::parse(parts[0]), hi = Rational::parse(parts[1]), step = Rational::parse(parts[2]);
    if (step.sign() <= 0) throw PreconditionError("beta grid step must be positive");
    std::vector<Rational> out;
    for (Rational b = lo; b <= hi; b += step) out.push_back(b);
    return out;
  }
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

Result cmd_scan(const Options& o) {
  const auto model = load_model(o);
  const auto h = load_polarization(model, o);
  std::vector<CohVector> characters;
  for (const auto& l : o.lines) characters.push_back(geometry::chern_of_line_bundle(model, geometry::parse_divisor(model, l)));
  if (!o.multiples.empty()) {
    const auto ends = split(o.multiples, ':');
    if (ends.size() != 2) throw ParseError("--multiples expects lo:hi");
    const long long lo = std::stoll(ends[0]), hi = std::stoll(ends[1]);
    for (long long c = lo; c <= hi; ++c) characters.push_back(geometry::chern_of_line_bundle(model, Rational(c) * h));
  }
  if (o.plane) characters.push_back(geometry::structure_sheaf_of_plane(model));
  if (o.point) characters.push_back(geometry::point_class(model));
  walls::ScanOptions options;
  options.threads = o.threads;
  const auto report = walls::bmt_scan(model, h, characters, parse_betas(o.betas), options);
  Result r;
  r.body = io::to_json(model, report);
  r.body["model"] = model.name();
  r.body["polarization"] = io::to_json(model, h);
  return r;
}

// --- output --------------------------------------------------------------------

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << ": (";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    out << ")\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "P1xS, P2xC, P1xP1xC or CY")->capture_default_str();
  sub->add_option("--d", o.d, "polarization degree of the abelian surface (P1xS)");
  sub->add_option("--s", o.s, "L^3 on the CY model");
  sub->add_option("--H", o.polarization, "polarization, e.g. h+f or \"h:1,f:1\"");
  sub->add_option("--char", o.character, "projected character e0,e1,e2,e3");
  sub->add_option("--line", o.line, "line bundle O(D), D as divisor data");
  sub->add_flag("--plane", o.plane, "structure sheaf of the plane (CY)");
  sub->add_flag("--point", o.point, "skyscraper sheaf of a point");
  sub->add_option("--alpha", o.alpha, "alpha > 0, exact");
  sub->add_option("--beta", o.beta, "beta, exact");
  sub->add_flag("--json", o.json, "JSON output");
  sub->add_option("--format", o.format, "json, text, csv or svg");
  sub->add_option("--config", o.config, "JSON config file mirroring the flags");
  sub->add_option("--seed", o.seed, "accepted for interface stability; scans are exhaustive");
  sub->add_flag("--timing", o.timing, "add wall-clock seconds to the report");
  sub->add_option("--m", o.m, "Frobenius / polarization parameter m");
  sub->add_option("--threads", o.threads, "OpenMP threads (0: runtime default)");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"tiltstab: exact checks for tilt stability on threefolds"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::map<std::string, std::function<Result(const Options&)>> commands = {
      {"chern", cmd_chern},     {"slope", cmd_slope},       {"nu", cmd_nu},
      {"charge", cmd_charge},   {"bmt", cmd_bmt},           {"reduce", cmd_reduce},
      {"thomsen", cmd_thomsen}, {"verify", cmd_verify},     {"euler-poly", cmd_euler_poly},
      {"walls", cmd_walls},     {"counterexample", cmd_counterexample}, {"dirichlet", cmd_dirichlet},
      {"scan", cmd_scan},
  };
  const std::map<std::string, std::string> descriptions = {
      {"chern", "projected Chern character, delta-bar and beta-bar"},
      {"slope", "mu slope (and nu when --alpha is given)"},
      {"nu", "tilt slope nu_{alpha,beta}"},
      {"charge", "central charge at (alpha, beta)"},
      {"bmt", "BMT surplus at a point and on the nu = 0 locus"},
      {"reduce", "ch3 at beta-bar (reduced form of the inequality)"},
      {"thomsen", "toric Frobenius pushforward of a line bundle"},
      {"verify", "check a vanishing lemma over all Thomsen residues"},
      {"euler-poly", "m -> chi(f^(m^2,m)* E) as a polynomial"},
      {"walls", "wall between two characters, or a destabilizer scan"},
      {"counterexample", "certificate for the plane in a Calabi-Yau threefold"},
      {"dirichlet", "continued-fraction convergents with the Dirichlet bound"},
      {"scan", "BMT survey of characters over a beta grid"},
  };
  for (const auto& [name, fn] : commands) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    add_common(sub, o);
    if (name == "thomsen") {
      sub->add_option("--Y", o.toric, "toric surface P1, P2 or P1xP1");
      sub->add_option("--D", o.divisor, "divisor on Y in Picard coordinates, e.g. 1,0");
    }
    if (name == "verify") {
      sub->add_option("--case", o.vanishing_case, "hom_integral, ext2_integral, hom_rational, ...")->capture_default_str();
      sub->add_option("--p", o.p);
      sub->add_option("--q", o.q);
      sub->add_option("--u", o.u, "0 selects the minimal admissible value");
      sub->add_option("--v", o.v, "0 selects the minimal admissible value");
      sub->add_option("--beta-bar", o.beta_bar, "irrational cases: check the Dirichlet and intersection inequalities");
      sub->add_flag("--no-enforce", o.no_enforce, "report hypothesis violations as failures instead of errors");
    }
    if (name == "dirichlet") {
      sub->add_option("--x", o.x, "quadratic number a+b*sqrt(d)");
      sub->add_option("--n", o.n, "number of convergents")->capture_default_str();
    }
    if (name == "walls") {
      sub->add_option("--with", o.with, "second character; prints the single wall");
      sub->add_option("--box", o.box, "ranges lo:hi,lo:hi,lo:hi for e0, e1, e2");
      sub->add_option("--bound", o.bound, "integer box |e_i| <= bound when --box is absent")->capture_default_str();
      sub->add_option("--den", o.den, "maximal denominator in the box")->capture_default_str();
      sub->add_option("--svg", o.svg, "write an SVG of the walls to this path");
    }
    if (name == "scan") {
      sub->add_option("--lines", o.lines, "line bundles O(D), repeatable");
      sub->add_option("--multiples", o.multiples, "add O(cH) for c in lo:hi");
      sub->add_option("--betas", o.betas, "beta grid lo:hi:step or comma list");
    }
  }

  try {
    auto args = apply_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::string format = o.format.empty() ? (o.json ? "json" : "text") : o.format;
  if (o.json && !o.format.empty() && o.format != "json") {
    err << "error: --json conflicts with --format " << o.format << '\n';
    return kUsageError;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    Result r = commands.at(name)(o);
    if (o.timing) {
      r.body["wall_clock_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (!o.svg.empty()) {
      if (r.svg.empty()) throw PreconditionError("--svg is only available for walls");
      std::ofstream file(o.svg);
      if (!file) throw PreconditionError("cannot write '" + o.svg + "'");
      file << r.svg;
    }
    if (format == "json") {
      out << r.body.dump(2) << '\n';
    } else if (format == "text") {
      print_text(r.body, "", out);
    } else if (format == "csv") {
      if (r.csv.empty()) throw PreconditionError("csv output is not available for '" + name + "'");
      out << r.csv;
    } else if (format == "svg") {
      if (r.svg.empty()) throw PreconditionError("svg output is only available for walls");
      out << r.svg;
    } else {
      throw PreconditionError("unknown format '" + format + "' (json, text, csv, svg)");
    }
    return r.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace tiltstab::cli
