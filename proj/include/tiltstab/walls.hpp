#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tiltstab/chern.hpp"
#include "tiltstab/geometry.hpp"
#include "tiltstab/tilt.hpp"

namespace tiltstab::walls {

using chern::ProjectedChern;

enum class WallKind {
  /// (beta - center)^2 + alpha^2 = radius^2, alpha > 0.
  Semicircle,
  /// beta = center for every alpha > 0 (the alpha^2 terms cancel).
  Vertical,
  NoWall,
  EverywhereEqual,
};

std::string to_string(WallKind k);

struct Wall {
  WallKind kind = WallKind::NoWall;
  Scalar center;         // center_beta, or the beta of a vertical wall
  Scalar radius_squared; // Semicircle only
  QuadraticNumber radius;
  ProjectedChern first;
  ProjectedChern second;

  bool is_wall() const { return kind == WallKind::Semicircle || kind == WallKind::Vertical; }
};

/// Conic coefficients of nu(v) = nu(w) cross-multiplied:
/// A (beta^2 + alpha^2) + B beta + C = 0.
struct WallEquation {
  Scalar a, b, c;
  /// Value of the left-hand side at (alpha, beta).
  Scalar evaluate(const Scalar& alpha, const Scalar& beta) const;
};

WallEquation wall_equation(const ProjectedChern& v, const ProjectedChern& w);
Wall wall_between(const ProjectedChern& v, const ProjectedChern& w);

/// Points on a semicircular wall with rational parameter t > 0:
/// beta = center + R (1 - t^2)/(1 + t^2), alpha = R 2t/(1 + t^2).
tilt::TiltPoint point_on_wall(const Wall& wall, const Rational& t);

/// e2/e1 for a rank-zero projection.
Scalar wall_center_rank0(const ProjectedChern& p);

/// 9 / (8 m^3 r0 s - 9 r0); also cross-checks 8 H^3 = 8 m^3 s - 9 for
/// H = mL - D/2 on the CY model (throws std::logic_error on mismatch).
Rational radius_bound(const Rational& s, long long m, long long r0 = 1);

struct ThresholdPair {
  /// Largest alpha with Re Z(O_D[1]) > 0 under each convention.
  Scalar omega_sqrt3;
  Scalar displayed_formula;
  bool discrepancy() const { return omega_sqrt3 != displayed_formula; }
  Scalar conservative() const { return omega_sqrt3 < displayed_formula ? omega_sqrt3 : displayed_formula; }
};

struct CounterexampleCertificate {
  Rational s;
  long long m = 2;
  geometry::DivisorClass polarization;
  ProjectedChern projected;
  ProjectedChern twisted;  // at beta = 1
  bool projected_matches = false;
  bool twisted_matches = false;
  /// nu_{alpha,1}(O_D) as a polynomial in alpha (numerator); zero when the
  /// character sits on nu = 0 for every alpha.
  Polynomial nu_numerator_at_beta1;
  Scalar nu_at_beta1;
  bool nu_vanishes_identically = false;
  /// Re Z(O_D[1]) at beta = 1 as polynomials in alpha.
  Polynomial re_z_omega_sqrt3;
  Polynomial re_z_displayed_formula;
  /// BMT surplus of O_D at beta = 1, polynomial in alpha.
  Polynomial bmt_surplus_at_beta1;
  Rational radius_bound;
  ThresholdPair thresholds;
  /// (radius_bound, conservative threshold) and (radius_bound, displayed-formula threshold)
  bool window_nonempty = false;
  bool window_nonempty_displayed = false;
  Scalar center;  // d(O_D)/c(O_D)
};

CounterexampleCertificate counterexample_certificate(const Rational& s, long long m);

/// Rational box for sub-characters (e0, e1, e2); e3 plays no role in walls.
struct CharacterBox {
  std::array<Rational, 3> lower;
  std::array<Rational, 3> upper;
  long long max_denominator = 1;

  bool empty() const;
  /// Integer box |e_i| <= bound.
  static CharacterBox symmetric(long long bound, long long max_denominator = 1);
};

/// Rationals in [lo, hi] with denominator at most max_den, ascending.
std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, long long max_den);

struct ScanOptions {
  int threads = 0;
};

/// Distinct walls wall_between(v, w) for admissible w in the box, sorted by
/// (kind, center, radius^2). The first w in lexicographic order is kept as
/// the witness.
std::vector<Wall> destabilizer_scan(const ProjectedChern& v, const CharacterBox& box, const ScanOptions& options = {});

enum class BmtClass { Saturated, Satisfied, ViolatedAtCharacterLevel, NoLocus };
std::string to_string(BmtClass c);

struct BmtSample {
  Rational beta;
  tilt::NuZeroLocus::Kind locus = tilt::NuZeroLocus::Kind::Empty;
  Scalar alpha;              // Point locus
  Scalar surplus;            // Point locus
  Polynomial surplus_in_alpha;  // Independent locus
  /// Independent locus: surplus < 0 exactly for alpha < violated_below.
  std::optional<Scalar> violated_below;
  BmtClass classification = BmtClass::NoLocus;
};

struct BmtCharacterReport {
  geometry::CohVector character;
  ProjectedChern projected;
  std::vector<BmtSample> samples;
  /// Worst classification over the grid (violated > satisfied > saturated > no locus).
  BmtClass overall = BmtClass::NoLocus;
};

struct BmtReport {
  std::vector<BmtCharacterReport> characters;
  static constexpr const char* note =
      "a character-level violation contradicts the inequality only if a tilt-semistable object with that character "
      "exists";
};

BmtReport bmt_scan(const geometry::ThreefoldModel& model, const geometry::DivisorClass& polarization,
                   const std::vector<geometry::CohVector>& characters, const std::vector<Rational>& beta_grid,
                   const ScanOptions& options = {});

/// Semicircles in the (beta, alpha) half-plane. Exact values go in the
/// annotations; doubles are used only for pixel positions.
std::string walls_svg(const ProjectedChern& v, const std::vector<Wall>& walls);

namespace reference {
std::vector<Wall> destabilizer_scan_serial(const ProjectedChern& v, const CharacterBox& box);
}

}  // namespace tiltstab::walls
