#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltstab/polynomial.hpp"
#include "tiltstab/rational.hpp"

namespace tiltstab::geometry {

enum class ModelKind { P1xAbelianSurface, P2xEllipticCurve, P1xP1xEllipticCurve, CY3WithPlane };

/// The toric factor Y of a product model X = Y x Z.
enum class ToricSurface { P1, P2, P1xP1 };

std::string to_string(ToricSurface y);
ToricSurface parse_toric_surface(std::string_view text);

/// Fan data of Y: Pic(Y) is free on `coordinates()` and every torus-invariant
/// divisor D_rho is one of the Picard generators.
struct ToricFactorData {
  ToricSurface surface;
  int dimension;
  /// rays_per_coordinate[c] = number of D_rho equal to the c-th Picard generator.
  std::vector<int> rays_per_coordinate;

  std::size_t coordinates() const { return rays_per_coordinate.size(); }
  int total_rays() const;
  /// chi(O_Y(D)) in closed form, D given in Picard coordinates.
  Rational euler_characteristic(const std::vector<long long>& divisor) const;
};

ToricFactorData toric_factor_data(ToricSurface y);

/// Vector of rational coefficients over a model's divisor basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::size_t rank) : coeffs_(rank) {}
  explicit DivisorClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& k);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& k, DivisorClass a) { return a *= k; }
  friend DivisorClass operator*(DivisorClass a, const Rational& k) { return a *= k; }
  friend DivisorClass operator/(DivisorClass a, const Rational& k) { return a *= k.inverse(); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Chern character (ch0, ch1, ch2, ch3). ch2 is kept as its pairing with each
/// basis divisor, which is all any formula here consumes.
struct CohVector {
  Rational ch0;
  DivisorClass ch1;
  std::vector<Rational> ch2;
  Rational ch3;

  CohVector operator-() const;
  CohVector& operator+=(const CohVector& o);
  friend CohVector operator+(CohVector a, const CohVector& b) { return a += b; }
  friend CohVector operator-(CohVector a, const CohVector& b) { return a += -b; }
  friend bool operator==(const CohVector&, const CohVector&) = default;
};

class ThreefoldModel {
 public:
  /// P^1 x S with S an abelian surface polarized by l, l^2 = 2d.
  static ThreefoldModel p1_x_abelian_surface(long long d = 1);
  static ThreefoldModel p2_x_elliptic_curve();
  static ThreefoldModel p1_x_p1_x_elliptic_curve();
  /// Calabi-Yau threefold containing a plane D, basis {L, D} with L^3 = s.
  static ThreefoldModel cy3_with_plane(const Rational& s);

  ModelKind kind() const { return kind_; }
  /// Short name used on the command line: P1xS, P2xC, P1xP1xC, CY.
  std::string name() const;
  bool is_product() const { return kind_ != ModelKind::CY3WithPlane; }
  /// d for P1xS, s for CY; 0 otherwise.
  const Rational& parameter() const { return parameter_; }

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  /// Index of a generator by name (aliases accepted); nullopt if unknown.
  std::optional<std::size_t> index_of(std::string_view name) const;

  const Rational& triple(std::size_t i, std::size_t j, std::size_t k) const {
    return form_[(i * rank() + j) * rank() + k];
  }

  DivisorClass zero() const { return DivisorClass(rank()); }
  DivisorClass generator(std::size_t i) const;
  DivisorClass generator(std::string_view name) const;
  /// Sum of all basis divisors (the default polarization h + f).
  DivisorClass sum_of_generators() const;

  /// Toric factor data; throws UnsupportedError on the CY model.
  const ToricFactorData& toric() const;
  /// Model basis index of each Picard coordinate of Y.
  const std::vector<std::size_t>& toric_generators() const { return toric_generators_; }
  const std::vector<std::size_t>& abelian_generators() const { return abelian_generators_; }
  int abelian_dimension() const { return abelian_dimension_; }
  /// Pullback of the torus-invariant divisors D_rho, one entry per ray.
  std::vector<DivisorClass> torus_invariant_divisors() const;

  /// td(X) as a CohVector (ch2 slot holds td2 paired with each generator).
  /// Throws UnsupportedError on the CY model.
  const CohVector& todd() const;

  /// Picard coordinates of the Y-component of D.
  std::vector<Rational> toric_coordinates(const DivisorClass& divisor) const;
  /// The part of D supported on toric generators (resp. abelian generators).
  DivisorClass toric_part(const DivisorClass& divisor) const;
  DivisorClass abelian_part(const DivisorClass& divisor) const;
  /// Lifts Picard coordinates of Y to a divisor on X.
  DivisorClass from_toric_coordinates(const std::vector<Rational>& coords) const;

 private:
  ThreefoldModel() = default;
  void compute_todd();
  void set_triple(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  ModelKind kind_ = ModelKind::P2xEllipticCurve;
  Rational parameter_;
  std::vector<std::string> generators_;
  std::vector<std::pair<std::string, std::size_t>> aliases_;
  std::vector<Rational> form_;
  std::optional<ToricFactorData> toric_;
  std::vector<std::size_t> toric_generators_;
  std::vector<std::size_t> abelian_generators_;
  int abelian_dimension_ = 0;
  std::optional<CohVector> todd_;
};

/// Builds a model from its command-line name ("P2xC", "CY", ...) and the
/// optional parameter (d or s).
ThreefoldModel make_model(std::string_view kind, const std::optional<Rational>& parameter = std::nullopt);

Rational intersect3(const ThreefoldModel& model, const DivisorClass& d1, const DivisorClass& d2,
                    const DivisorClass& d3);

/// ch2-style pairing: D1 . D2 as a functional on the basis.
std::vector<Rational> curve_functional(const ThreefoldModel& model, const DivisorClass& d1,
                                       const DivisorClass& d2);
Rational pair(const std::vector<Rational>& functional, const DivisorClass& divisor);

bool is_ample(const ThreefoldModel& model, const DivisorClass& divisor);
bool is_nef(const ThreefoldModel& model, const DivisorClass& divisor);
bool is_effective(const ThreefoldModel& model, const DivisorClass& divisor);
bool is_anti_ample(const ThreefoldModel& model, const DivisorClass& divisor);

/// Generators of the effective cone used by the negative-divisor check.
std::vector<DivisorClass> effective_cone_generators(const ThreefoldModel& model);
/// First effective class D (generator or pairwise sum) with H.D^2 < 0.
std::optional<DivisorClass> negative_divisor_witness(const ThreefoldModel& model, const DivisorClass& polarization);
/// H.D^2 >= 0 on every effective-cone generator and pairwise sum.
bool check_negative_divisor_hypothesis(const ThreefoldModel& model, const DivisorClass& polarization);

CohVector zero_character(const ThreefoldModel& model);
/// ch(O(D)) = e^D.
CohVector chern_of_line_bundle(const ThreefoldModel& model, const DivisorClass& divisor);
/// ch(O_D) for the plane D on the CY model.
CohVector structure_sheaf_of_plane(const ThreefoldModel& model);
/// Skyscraper sheaf of a point, (0, 0, 0, 1).
CohVector point_class(const ThreefoldModel& model);

/// Pullback of a divisor along f^(a,b) = (Frobenius a on Y) x (multiplication b on Z).
DivisorClass pullback_divisor(const ThreefoldModel& model, long long a, long long b, const DivisorClass& divisor);
/// deg f^(a,b) = a^{dim Y} b^{2 dim Z}.
Rational frobenius_degree(const ThreefoldModel& model, long long a, long long b);
/// Pullback of a Chern character along f^(a,b).
CohVector frob_action(const ThreefoldModel& model, long long a, long long b, const CohVector& v);

/// Riemann-Roch: integral of ch(v) td(X).
Rational euler_char(const ThreefoldModel& model, const CohVector& v);
/// m -> chi(f^(m^2, m)* v) as a polynomial in m.
PolynomialInM euler_polynomial(const ThreefoldModel& model, const CohVector& v);

DivisorClass canonical_divisor(const ThreefoldModel& model);

/// Parses "h:1,f:1" or linear expressions such as "h+f", "2*L-1/2*D".
DivisorClass parse_divisor(const ThreefoldModel& model, std::string_view text);
std::string format_divisor(const ThreefoldModel& model, const DivisorClass& divisor);

}  // namespace tiltstab::geometry
