#include "tiltstab/walls.hpp"

#include <exception>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <omp.h>

#include "tiltstab/errors.hpp"

namespace tiltstab::walls {

std::string to_string(WallKind k) {
  switch (k) {
    case WallKind::Semicircle: return "semicircle";
    case WallKind::Vertical: return "vertical";
    case WallKind::NoWall: return "no wall";
    case WallKind::EverywhereEqual: return "everywhere equal";
  }
  return "?";
}

Scalar WallEquation::evaluate(const Scalar& alpha, const Scalar& beta) const {
  return a * (beta * beta + alpha * alpha) + b * beta + c;
}

WallEquation wall_equation(const ProjectedChern& v, const ProjectedChern& w) {
  const Scalar v0(v.e0), w0(w.e0);
  return {Scalar(Rational(1, 2)) * (v.e1 * w0 - v0 * w.e1), v0 * w.e2 - v.e2 * w0, v.e2 * w.e1 - v.e1 * w.e2};
}

Wall wall_between(const ProjectedChern& v, const ProjectedChern& w) {
  const WallEquation eq = wall_equation(v, w);
  Wall wall;
  wall.first = v;
  wall.second = w;
  if (eq.a.is_zero()) {
    if (eq.b.is_zero()) {
      wall.kind = eq.c.is_zero() ? WallKind::EverywhereEqual : WallKind::NoWall;
    } else {
      wall.kind = WallKind::Vertical;
      wall.center = -eq.c / eq.b;
    }
    return wall;
  }
  const Scalar two_a = Scalar(2) * eq.a;
  const Scalar r2 = (eq.b * eq.b - Scalar(4) * eq.a * eq.c) / (two_a * two_a);
  if (r2.sign() <= 0) {
    wall.kind = WallKind::NoWall;
    return wall;
  }
  if (!r2.is_rational()) throw UnsupportedError("wall radius^2 " + r2.str() + " is not rational");
  wall.kind = WallKind::Semicircle;
  wall.center = -eq.b / two_a;
  wall.radius_squared = r2;
  wall.radius = quad_sqrt(r2.as_rational());
  return wall;
}

tilt::TiltPoint point_on_wall(const Wall& wall, const Rational& t) {
  if (wall.kind != WallKind::Semicircle) throw PreconditionError("point_on_wall needs a semicircular wall");
  if (t.sign() <= 0) throw PreconditionError("wall parameter t must be positive");
  const Rational denom = Rational(1) + t * t;
  const Scalar cosine((Rational(1) - t * t) / denom);
  const Scalar sine(Rational(2) * t / denom);
  return tilt::TiltPoint(wall.radius * sine, wall.center + wall.radius * cosine);
}

Scalar wall_center_rank0(const ProjectedChern& p) {
  if (!p.e0.is_zero()) throw PreconditionError("wall_center_rank0 needs e0 = 0");
  if (p.e1.is_zero()) throw DomainError("wall_center_rank0 needs e1 != 0");
  return p.e2 / p.e1;
}

namespace {

geometry::DivisorClass plane_polarization(const geometry::ThreefoldModel& cy, long long m) {
  return Rational(m) * cy.generator("L") - Rational(1, 2) * cy.generator("D");
}

}  // namespace

Rational radius_bound(const Rational& s, long long m, long long r0) {
  if (m < 2) throw PreconditionError("radius_bound needs m >= 2");
  if (r0 < 1) throw PreconditionError("radius_bound needs r0 >= 1");
  const Rational denom = Rational(8 * m * m * m * r0) * s - Rational(9 * r0);
  if (denom.sign() <= 0) throw DomainError("8 m^3 r0 s - 9 r0 must be positive, got " + denom.str());
  const auto cy = geometry::ThreefoldModel::cy3_with_plane(s);
  const auto h = plane_polarization(cy, m);
  const Rational rank_a = geometry::intersect3(cy, h, h, h) * Rational(r0);
  if (Rational(8) * rank_a != denom) throw std::logic_error("8 r(A) disagrees with 8 m^3 r0 s - 9 r0");
  return Rational(9) / denom;
}

namespace {

/// Largest alpha with q(alpha) > 0 on (0, threshold), q = q0 + q2 alpha^2.
Scalar positivity_threshold(const Polynomial& q) {
  if (q.degree() > 2 || !q.coefficient(1).is_zero()) throw std::logic_error("unexpected shape of Re Z in alpha");
  const Rational q0 = q.coefficient(0);
  const Rational q2 = q.coefficient(2);
  if (!(q0.sign() > 0 && q2.sign() < 0)) throw std::logic_error("Re Z(O_D[1]) has no positivity threshold");
  return quad_sqrt(-q0 / q2);
}

}  // namespace

CounterexampleCertificate counterexample_certificate(const Rational& s, long long m) {
  if (m < 2) throw PreconditionError("counterexample needs m >= 2");
  CounterexampleCertificate cert;
  cert.s = s;
  cert.m = m;
  const auto cy = geometry::ThreefoldModel::cy3_with_plane(s);
  cert.polarization = plane_polarization(cy, m);
  cert.projected = chern::project(cy, cert.polarization, geometry::structure_sheaf_of_plane(cy));
  cert.twisted = chern::twist(cert.projected, Scalar(1));
  cert.projected_matches =
      cert.projected == ProjectedChern{Rational(0), Rational(9, 4), Rational(9, 4), Rational(3, 2)};
  cert.twisted_matches = cert.twisted == ProjectedChern{Rational(0), Rational(9, 4), Rational(0), Rational(3, 8)};

  const Polynomial beta1(Rational(1));
  cert.nu_numerator_at_beta1 = tilt::nu_numerator_in_alpha(cert.projected, beta1);
  cert.nu_vanishes_identically = cert.nu_numerator_at_beta1.is_zero();
  cert.nu_at_beta1 = tilt::nu_slope(cert.projected, tilt::TiltPoint(Scalar(1), Scalar(1))).value;

  // O_D[1] flips the sign of Z.
  cert.re_z_omega_sqrt3 = -tilt::central_charge_re_in_alpha(cert.projected, beta1, tilt::ChargeConvention::OmegaSqrt3);
  cert.re_z_displayed_formula =
      -tilt::central_charge_re_in_alpha(cert.projected, beta1, tilt::ChargeConvention::DisplayedFormula);
  cert.bmt_surplus_at_beta1 = tilt::bmt_surplus_in_alpha(cert.projected, beta1);
  cert.thresholds = {positivity_threshold(cert.re_z_omega_sqrt3), positivity_threshold(cert.re_z_displayed_formula)};

  cert.radius_bound = radius_bound(s, m, 1);
  cert.window_nonempty = Scalar(cert.radius_bound) < cert.thresholds.conservative();
  cert.window_nonempty_displayed = Scalar(cert.radius_bound) < cert.thresholds.displayed_formula;
  cert.center = wall_center_rank0(cert.projected);
  return cert;
}

bool CharacterBox::empty() const {
  if (max_denominator < 1) return true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (lower[i] > upper[i]) return true;
  }
  return false;
}

CharacterBox CharacterBox::symmetric(long long bound, long long max_denominator) {
  CharacterBox box;
  for (std::size_t i = 0; i < 3; ++i) {
    box.lower[i] = Rational(-bound);
    box.upper[i] = Rational(bound);
  }
  box.max_denominator = max_denominator;
  return box;
}

std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, long long max_den) {
  std::set<Rational> values;
  for (long long den = 1; den <= max_den; ++den) {
    const Rational d(den);
    const mpz_class first = -(-(lo * d)).floor();
    const mpz_class last = (hi * d).floor();
    for (mpz_class num = first; num <= last; ++num) values.insert(Rational(num, mpz_class(static_cast<long>(den))));
  }
  return {values.begin(), values.end()};
}

namespace {

using WallKey = std::tuple<int, Scalar, Scalar>;

WallKey key_of(const Wall& w) { return {static_cast<int>(w.kind), w.center, w.radius_squared}; }

struct Grid {
  std::vector<Rational> e0, e1, e2;
  std::size_t size() const { return e0.size() * e1.size() * e2.size(); }
  ProjectedChern at(std::size_t flat) const {
    const std::size_t k = flat % e2.size();
    const std::size_t j = (flat / e2.size()) % e1.size();
    const std::size_t i = flat / (e2.size() * e1.size());
    return {e0[i], e1[j], e2[k], Scalar()};
  }
};

Grid make_grid(const CharacterBox& box) {
  if (box.empty()) return {};
  return {rational_grid(box.lower[0], box.upper[0], box.max_denominator),
          rational_grid(box.lower[1], box.upper[1], box.max_denominator),
          rational_grid(box.lower[2], box.upper[2], box.max_denominator)};
}

std::optional<Wall> candidate_wall(const ProjectedChern& v, const ProjectedChern& w) {
  if (chern::delta_bar(w).sign() < 0) return std::nullopt;
  if (chern::delta_bar(v - w).sign() < 0) return std::nullopt;
  Wall wall = wall_between(v, w);
  if (!wall.is_wall()) return std::nullopt;
  return wall;
}

std::vector<Wall> collect(std::map<WallKey, Wall>& found) {
  std::vector<Wall> out;
  out.reserve(found.size());
  for (auto& [key, wall] : found) out.push_back(std::move(wall));
  return out;
}

void require_admissible(const ProjectedChern& v) {
  if (chern::delta_bar(v).sign() < 0) throw PreconditionError("destabilizer scan needs delta-bar(v) >= 0");
}

}  // namespace

std::vector<Wall> destabilizer_scan(const ProjectedChern& v, const CharacterBox& box, const ScanOptions& options) {
  require_admissible(v);
  const Grid grid = make_grid(box);
  const long long n = static_cast<long long>(grid.size());
  // Per-thread maps remember the lowest grid index per wall so the merged
  // witness matches the serial scan regardless of scheduling.
  using Local = std::map<WallKey, std::pair<long long, Wall>>;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  std::vector<Local> locals(static_cast<std::size_t>(threads));
  std::exception_ptr error;
#pragma omp parallel num_threads(threads)
  {
    Local& local = locals[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
      try {
        if (auto w = candidate_wall(v, grid.at(static_cast<std::size_t>(i)))) {
          auto [it, inserted] = local.try_emplace(key_of(*w), i, *w);
          if (!inserted && i < it->second.first) it->second = {i, std::move(*w)};
        }
      } catch (...) {
#pragma omp critical(tiltstab_scan_error)
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  Local merged;
  for (auto& local : locals) {
    for (auto& [key, entry] : local) {
      auto [it, inserted] = merged.try_emplace(key, entry);
      if (!inserted && entry.first < it->second.first) it->second = std::move(entry);
    }
  }
  std::map<WallKey, Wall> found;
  for (auto& [key, entry] : merged) found.emplace(key, std::move(entry.second));
  return collect(found);
}

namespace reference {

std::vector<Wall> destabilizer_scan_serial(const ProjectedChern& v, const CharacterBox& box) {
  require_admissible(v);
  const Grid grid = make_grid(box);
  std::map<WallKey, Wall> found;
  for (const auto& a : grid.e0) {
    for (const auto& b : grid.e1) {
      for (const auto& c : grid.e2) {
        if (auto wall = candidate_wall(v, ProjectedChern{a, b, c, Scalar()})) found.try_emplace(key_of(*wall), *wall);
      }
    }
  }
  return collect(found);
}

}  // namespace reference

std::string to_string(BmtClass c) {
  switch (c) {
    case BmtClass::Saturated: return "saturated";
    case BmtClass::Satisfied: return "satisfied";
    case BmtClass::ViolatedAtCharacterLevel: return "violated-at-character-level";
    case BmtClass::NoLocus: return "no-locus";
  }
  return "?";
}

namespace {

int severity(BmtClass c) {
  switch (c) {
    case BmtClass::NoLocus: return 0;
    case BmtClass::Saturated: return 1;
    case BmtClass::Satisfied: return 2;
    case BmtClass::ViolatedAtCharacterLevel: return 3;
  }
  return 0;
}

BmtClass classify_sign(int sign) {
  if (sign == 0) return BmtClass::Saturated;
  return sign > 0 ? BmtClass::Satisfied : BmtClass::ViolatedAtCharacterLevel;
}

BmtSample sample_at(const ProjectedChern& p, const Rational& beta) {
  BmtSample s;
  s.beta = beta;
  const auto locus = tilt::nu_zero_alpha(p, Scalar(beta));
  s.locus = locus.kind;
  switch (locus.kind) {
    case tilt::NuZeroLocus::Kind::Empty:
      s.classification = BmtClass::NoLocus;
      break;
    case tilt::NuZeroLocus::Kind::Point:
      s.alpha = locus.alpha;
      s.surplus = tilt::bmt_surplus(p, tilt::TiltPoint(locus.alpha, Scalar(beta)));
      s.classification = classify_sign(s.surplus.sign());
      break;
    case tilt::NuZeroLocus::Kind::Independent: {
      // surplus = alpha^2/6 H^2 ch1^beta - ch3^beta = c0 + c2 alpha^2
      s.surplus_in_alpha = tilt::bmt_surplus_in_alpha(p, Polynomial(beta));
      const Rational c0 = s.surplus_in_alpha.coefficient(0);
      const Rational c2 = s.surplus_in_alpha.coefficient(2);
      if (s.surplus_in_alpha.degree() > 2 || !s.surplus_in_alpha.coefficient(1).is_zero()) {
        throw std::logic_error("unexpected shape of the BMT surplus in alpha");
      }
      if (s.surplus_in_alpha.is_zero()) {
        s.classification = BmtClass::Saturated;
      } else if (c2.sign() < 0 || (c2.is_zero() && c0.sign() < 0)) {
        s.classification = BmtClass::ViolatedAtCharacterLevel;
      } else if (c0.sign() < 0) {
        s.classification = BmtClass::ViolatedAtCharacterLevel;
        s.violated_below = quad_sqrt(-c0 / c2);
      } else {
        s.classification = BmtClass::Satisfied;
      }
      break;
    }
  }
  return s;
}

}  // namespace

BmtReport bmt_scan(const geometry::ThreefoldModel& model, const geometry::DivisorClass& polarization,
                   const std::vector<geometry::CohVector>& characters, const std::vector<Rational>& beta_grid,
                   const ScanOptions& options) {
  if (!geometry::is_ample(model, polarization)) throw PreconditionError("polarization is not ample");
  BmtReport report;
  if (beta_grid.empty()) return report;
  report.characters.resize(characters.size());
  const long long n = static_cast<long long>(characters.size());
  std::exception_ptr error;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    try {
      auto& out = report.characters[static_cast<std::size_t>(i)];
      out.character = characters[static_cast<std::size_t>(i)];
      out.projected = chern::project(model, polarization, out.character);
      for (const auto& beta : beta_grid) {
        out.samples.push_back(sample_at(out.projected, beta));
        if (severity(out.samples.back().classification) > severity(out.overall)) {
          out.overall = out.samples.back().classification;
        }
      }
    } catch (...) {
#pragma omp critical(tiltstab_bmt_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return report;
}

std::string walls_svg(const ProjectedChern& v, const std::vector<Wall>& walls) {
  constexpr double width = 800, height = 420, margin = 40;
  double lo = -1, hi = 1, top = 1;
  for (const auto& w : walls) {
    const double c = w.center.to_double();
    const double r = w.kind == WallKind::Semicircle ? w.radius.to_double() : 0.0;
    lo = std::min(lo, c - r);
    hi = std::max(hi, c + r);
    top = std::max(top, r);
  }
  const double span = hi - lo;
  lo -= 0.05 * span;
  hi += 0.05 * span;
  top *= 1.1;
  const double sx = (width - 2 * margin) / (hi - lo);
  const double sy = (height - 2 * margin) / top;
  const double scale = std::min(sx, sy);
  auto px = [&](double beta) { return margin + (beta - lo) * scale; };
  auto py = [&](double alpha) { return height - margin - alpha * scale; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<title>walls for v = (" << v.str() << ")</title>\n";
  os << "<line x1=\"" << px(lo) << "\" y1=\"" << py(0) << "\" x2=\"" << px(hi) << "\" y2=\"" << py(0)
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << px(hi) - 20 << "\" y=\"" << py(0) + 16 << "\" font-size=\"12\">beta</text>\n";
  os << "<text x=\"" << margin << "\" y=\"" << margin - 10 << "\" font-size=\"12\">alpha</text>\n";
  double label_y = margin;
  for (const auto& w : walls) {
    const double c = w.center.to_double();
    std::string label;
    if (w.kind == WallKind::Semicircle) {
      const double r = w.radius.to_double();
      os << "<path d=\"M " << px(c - r) << ' ' << py(0) << " A " << r * scale << ' ' << r * scale << " 0 0 1 "
         << px(c + r) << ' ' << py(0) << "\" fill=\"none\" stroke=\"steelblue\"/>\n";
      label = "center " + w.center.str() + ", radius " + w.radius.str() + ", w = (" + w.second.str() + ")";
    } else {
      os << "<line x1=\"" << px(c) << "\" y1=\"" << py(0) << "\" x2=\"" << px(c) << "\" y2=\"" << py(top)
         << "\" stroke=\"darkorange\"/>\n";
      label = "vertical beta = " + w.center.str() + ", w = (" + w.second.str() + ")";
    }
    os << "<text x=\"" << width - margin - 300 << "\" y=\"" << label_y << "\" font-size=\"10\">" << label << "</text>\n";
    label_y += 12;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tiltstab::walls
