#include "tiltstab/geometry.hpp"

#include <algorithm>
#include <cctype>

#include "tiltstab/errors.hpp"

namespace tiltstab::geometry {

std::string to_string(ToricSurface y) {
  switch (y) {
    case ToricSurface::P1: return "P1";
    case ToricSurface::P2: return "P2";
    case ToricSurface::P1xP1: return "P1xP1";
  }
  return "?";
}

ToricSurface parse_toric_surface(std::string_view text) {
  if (text == "P1") return ToricSurface::P1;
  if (text == "P2") return ToricSurface::P2;
  if (text == "P1xP1") return ToricSurface::P1xP1;
  throw ParseError("unknown toric factor '" + std::string(text) + "' (expected P1, P2 or P1xP1)");
}

int ToricFactorData::total_rays() const {
  int n = 0;
  for (int r : rays_per_coordinate) n += r;
  return n;
}

Rational ToricFactorData::euler_characteristic(const std::vector<long long>& divisor) const {
  switch (surface) {
    case ToricSurface::P1: return Rational(divisor.at(0) + 1);
    case ToricSurface::P2: return Rational((divisor.at(0) + 1) * (divisor.at(0) + 2), 2);
    case ToricSurface::P1xP1: return Rational((divisor.at(0) + 1) * (divisor.at(1) + 1));
  }
  return Rational(0);
}

ToricFactorData toric_factor_data(ToricSurface y) {
  switch (y) {
    case ToricSurface::P1: return {y, 1, {2}};
    case ToricSurface::P2: return {y, 2, {3}};
    case ToricSurface::P1xP1: return {y, 2, {2, 2}};
  }
  throw ParseError("unknown toric factor");
}

// ---------------------------------------------------------------------------

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size() != size()) throw PreconditionError("divisor classes from different models");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) { return *this += -o; }

DivisorClass& DivisorClass::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

CohVector CohVector::operator-() const {
  CohVector out = *this;
  out.ch0 = -ch0;
  out.ch1 = -ch1;
  for (auto& c : out.ch2) c = -c;
  out.ch3 = -ch3;
  return out;
}

CohVector& CohVector::operator+=(const CohVector& o) {
  ch0 += o.ch0;
  ch1 += o.ch1;
  for (std::size_t i = 0; i < ch2.size(); ++i) ch2[i] += o.ch2.at(i);
  ch3 += o.ch3;
  return *this;
}

// ---------------------------------------------------------------------------

void ThreefoldModel::set_triple(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  const std::size_t idx[3] = {i, j, k};
  std::size_t perm[3] = {0, 1, 2};
  do {
    form_[(idx[perm[0]] * rank() + idx[perm[1]]) * rank() + idx[perm[2]]] = value;
  } while (std::next_permutation(perm, perm + 3));
}

ThreefoldModel ThreefoldModel::p1_x_abelian_surface(long long d) {
  if (d <= 0) throw PreconditionError("abelian surface polarization degree d must be positive");
  ThreefoldModel m;
  m.kind_ = ModelKind::P1xAbelianSurface;
  m.parameter_ = Rational(d);
  m.generators_ = {"h", "l"};
  m.aliases_ = {{"f", 1}};
  m.form_.assign(8, Rational(0));
  m.set_triple(0, 1, 1, Rational(2 * d));  // h.l^2 = 2d
  m.toric_ = toric_factor_data(ToricSurface::P1);
  m.toric_generators_ = {0};
  m.abelian_generators_ = {1};
  m.abelian_dimension_ = 2;
  m.compute_todd();
  return m;
}

ThreefoldModel ThreefoldModel::p2_x_elliptic_curve() {
  ThreefoldModel m;
  m.kind_ = ModelKind::P2xEllipticCurve;
  m.generators_ = {"h", "f"};
  m.form_.assign(8, Rational(0));
  m.set_triple(0, 0, 1, Rational(1));  // h^2.f = 1
  m.toric_ = toric_factor_data(ToricSurface::P2);
  m.toric_generators_ = {0};
  m.abelian_generators_ = {1};
  m.abelian_dimension_ = 1;
  m.compute_todd();
  return m;
}

ThreefoldModel ThreefoldModel::p1_x_p1_x_elliptic_curve() {
  ThreefoldModel m;
  m.kind_ = ModelKind::P1xP1xEllipticCurve;
  m.generators_ = {"h1", "h2", "f"};
  m.form_.assign(27, Rational(0));
  m.set_triple(0, 1, 2, Rational(1));  // h1.h2.f = 1
  m.toric_ = toric_factor_data(ToricSurface::P1xP1);
  m.toric_generators_ = {0, 1};
  m.abelian_generators_ = {2};
  m.abelian_dimension_ = 1;
  m.compute_todd();
  return m;
}

ThreefoldModel ThreefoldModel::cy3_with_plane(const Rational& s) {
  if (s.sign() <= 0) throw PreconditionError("L^3 = s must be positive");
  ThreefoldModel m;
  m.kind_ = ModelKind::CY3WithPlane;
  m.parameter_ = s;
  m.generators_ = {"L", "D"};
  m.form_.assign(8, Rational(0));
  m.set_triple(0, 0, 0, s);
  m.set_triple(1, 1, 1, Rational(9));  // D^3 = 9; L^2 D = L D^2 = 0
  return m;
}

std::string ThreefoldModel::name() const {
  switch (kind_) {
    case ModelKind::P1xAbelianSurface: return "P1xS";
    case ModelKind::P2xEllipticCurve: return "P2xC";
    case ModelKind::P1xP1xEllipticCurve: return "P1xP1xC";
    case ModelKind::CY3WithPlane: return "CY";
  }
  return "?";
}

std::optional<std::size_t> ThreefoldModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return i;
  }
  for (const auto& [alias, idx] : aliases_) {
    if (alias == name) return idx;
  }
  return std::nullopt;
}

DivisorClass ThreefoldModel::generator(std::size_t i) const {
  DivisorClass out = zero();
  out[i] = Rational(1);
  return out;
}

DivisorClass ThreefoldModel::generator(std::string_view name) const {
  const auto idx = index_of(name);
  if (!idx) throw ParseError("model " + this->name() + " has no generator '" + std::string(name) + "'");
  return generator(*idx);
}

DivisorClass ThreefoldModel::sum_of_generators() const {
  DivisorClass out = zero();
  for (std::size_t i = 0; i < rank(); ++i) out[i] = Rational(1);
  return out;
}

const ToricFactorData& ThreefoldModel::toric() const {
  if (!toric_) throw UnsupportedError("model " + name() + " has no toric factor");
  return *toric_;
}

std::vector<DivisorClass> ThreefoldModel::torus_invariant_divisors() const {
  const auto& t = toric();
  std::vector<DivisorClass> out;
  for (std::size_t c = 0; c < t.coordinates(); ++c) {
    for (int r = 0; r < t.rays_per_coordinate[c]; ++r) out.push_back(generator(toric_generators_[c]));
  }
  return out;
}

const CohVector& ThreefoldModel::todd() const {
  if (!todd_) throw UnsupportedError("todd data unavailable on the CY model");
  return *todd_;
}

void ThreefoldModel::compute_todd() {
  // Abelian factors have trivial Todd class, so td(X) is pulled back from Y:
  // td1 = -K_Y/2, td2 = chi(O_Y) [pt_Y], td3 = 0.
  CohVector td = zero_character(*this);
  td.ch0 = Rational(1);
  td.ch1 = canonical_divisor(*this) * Rational(-1, 2);
  switch (toric().surface) {
    case ToricSurface::P1:
      break;
    case ToricSurface::P2: {
      const auto h = generator(toric_generators_[0]);
      td.ch2 = curve_functional(*this, h, h);
      break;
    }
    case ToricSurface::P1xP1:
      td.ch2 = curve_functional(*this, generator(toric_generators_[0]), generator(toric_generators_[1]));
      break;
  }
  todd_ = std::move(td);
}

std::vector<Rational> ThreefoldModel::toric_coordinates(const DivisorClass& divisor) const {
  std::vector<Rational> out;
  for (std::size_t idx : toric_generators_) out.push_back(divisor[idx]);
  return out;
}

DivisorClass ThreefoldModel::toric_part(const DivisorClass& divisor) const {
  DivisorClass out = zero();
  for (std::size_t idx : toric_generators_) out[idx] = divisor[idx];
  return out;
}

DivisorClass ThreefoldModel::abelian_part(const DivisorClass& divisor) const {
  DivisorClass out = zero();
  for (std::size_t idx : abelian_generators_) out[idx] = divisor[idx];
  return out;
}

DivisorClass ThreefoldModel::from_toric_coordinates(const std::vector<Rational>& coords) const {
  if (coords.size() != toric_generators_.size()) throw PreconditionError("wrong number of Picard coordinates");
  DivisorClass out = zero();
  for (std::size_t c = 0; c < coords.size(); ++c) out[toric_generators_[c]] = coords[c];
  return out;
}

ThreefoldModel make_model(std::string_view kind, const std::optional<Rational>& parameter) {
  if (kind == "P1xS" || kind == "P1xAbelianSurface") {
    const Rational d = parameter.value_or(Rational(1));
    if (!d.is_integer()) throw PreconditionError("P1xS parameter d must be a positive integer");
    return ThreefoldModel::p1_x_abelian_surface(d.to_int64());
  }
  if (kind == "P2xC" || kind == "P2xEllipticCurve") return ThreefoldModel::p2_x_elliptic_curve();
  if (kind == "P1xP1xC" || kind == "P1xP1xEllipticCurve") return ThreefoldModel::p1_x_p1_x_elliptic_curve();
  if (kind == "CY" || kind == "CY3WithPlane") {
    if (!parameter) throw PreconditionError("CY model needs the parameter s = L^3");
    return ThreefoldModel::cy3_with_plane(*parameter);
  }
  throw PreconditionError("unknown model '" + std::string(kind) + "' (expected P1xS, P2xC, P1xP1xC or CY)");
}

// ---------------------------------------------------------------------------

Rational intersect3(const ThreefoldModel& model, const DivisorClass& d1, const DivisorClass& d2,
                    const DivisorClass& d3) {
  const std::size_t n = model.rank();
  if (d1.size() != n || d2.size() != n || d3.size() != n) {
    throw PreconditionError("divisor class does not match model " + model.name());
  }
  Rational sum;
  for (std::size_t i = 0; i < n; ++i) {
    if (d1[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (d2[j].is_zero()) continue;
      const Rational c12 = d1[i] * d2[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (d3[k].is_zero()) continue;
        const Rational& t = model.triple(i, j, k);
        if (!t.is_zero()) sum += c12 * d3[k] * t;
      }
    }
  }
  return sum;
}

std::vector<Rational> curve_functional(const ThreefoldModel& model, const DivisorClass& d1,
                                       const DivisorClass& d2) {
  std::vector<Rational> out;
  out.reserve(model.rank());
  for (std::size_t k = 0; k < model.rank(); ++k) out.push_back(intersect3(model, d1, d2, model.generator(k)));
  return out;
}

Rational pair(const std::vector<Rational>& functional, const DivisorClass& divisor) {
  if (functional.size() != divisor.size()) throw PreconditionError("functional/divisor size mismatch");
  Rational sum;
  for (std::size_t i = 0; i < divisor.size(); ++i) sum += functional[i] * divisor[i];
  return sum;
}

namespace {

// The only classes whose positivity the CY model decides: m L - D/2, m >= 2.
bool in_designated_cy_family(const DivisorClass& divisor) {
  return divisor[1] == Rational(-1, 2) && divisor[0].is_integer() && divisor[0] >= Rational(2);
}

[[noreturn]] void undecidable(const ThreefoldModel& model, const DivisorClass& divisor) {
  throw UnsupportedError("positivity of " + format_divisor(model, divisor) +
                         " is undecidable in model CY (only m*L-1/2*D with integer m >= 2 is known ample)");
}

}  // namespace

bool is_ample(const ThreefoldModel& model, const DivisorClass& divisor) {
  if (divisor.size() != model.rank()) throw PreconditionError("divisor class does not match model");
  if (!model.is_product()) {
    if (in_designated_cy_family(divisor)) return true;
    undecidable(model, divisor);
  }
  return std::all_of(divisor.coefficients().begin(), divisor.coefficients().end(),
                     [](const Rational& c) { return c.sign() > 0; });
}

bool is_nef(const ThreefoldModel& model, const DivisorClass& divisor) {
  if (divisor.size() != model.rank()) throw PreconditionError("divisor class does not match model");
  if (!model.is_product()) {
    if (in_designated_cy_family(divisor)) return true;
    undecidable(model, divisor);
  }
  return std::all_of(divisor.coefficients().begin(), divisor.coefficients().end(),
                     [](const Rational& c) { return c.sign() >= 0; });
}

bool is_effective(const ThreefoldModel& model, const DivisorClass& divisor) {
  if (divisor.size() != model.rank()) throw PreconditionError("divisor class does not match model");
  const bool nonnegative = std::all_of(divisor.coefficients().begin(), divisor.coefficients().end(),
                                       [](const Rational& c) { return c.sign() >= 0; });
  if (!model.is_product()) {
    // L (nef and big) and the plane D are effective.
    if (nonnegative || in_designated_cy_family(divisor)) return true;
    undecidable(model, divisor);
  }
  return nonnegative;
}

bool is_anti_ample(const ThreefoldModel& model, const DivisorClass& divisor) { return is_ample(model, -divisor); }

std::vector<DivisorClass> effective_cone_generators(const ThreefoldModel& model) {
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < model.rank(); ++i) out.push_back(model.generator(i));
  return out;
}

std::optional<DivisorClass> negative_divisor_witness(const ThreefoldModel& model, const DivisorClass& polarization) {
  if (!is_ample(model, polarization)) {
    throw PreconditionError("polarization " + format_divisor(model, polarization) + " is not ample");
  }
  const auto gens = effective_cone_generators(model);
  std::vector<DivisorClass> candidates = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) candidates.push_back(gens[i] + gens[j]);
  }
  for (const auto& d : candidates) {
    if (intersect3(model, polarization, d, d).sign() < 0) return d;
  }
  return std::nullopt;
}

bool check_negative_divisor_hypothesis(const ThreefoldModel& model, const DivisorClass& polarization) {
  return !negative_divisor_witness(model, polarization).has_value();
}

// ---------------------------------------------------------------------------

CohVector zero_character(const ThreefoldModel& model) {
  return CohVector{Rational(0), model.zero(), std::vector<Rational>(model.rank()), Rational(0)};
}

CohVector chern_of_line_bundle(const ThreefoldModel& model, const DivisorClass& divisor) {
  CohVector v = zero_character(model);
  v.ch0 = Rational(1);
  v.ch1 = divisor;
  v.ch2 = curve_functional(model, divisor, divisor);
  for (auto& c : v.ch2) c *= Rational(1, 2);
  v.ch3 = intersect3(model, divisor, divisor, divisor) * Rational(1, 6);
  return v;
}

CohVector structure_sheaf_of_plane(const ThreefoldModel& model) {
  if (model.kind() != ModelKind::CY3WithPlane) {
    throw PreconditionError("structure_sheaf_of_plane needs the CY model, got " + model.name());
  }
  // O_D = O - O(-D)
  return chern_of_line_bundle(model, model.zero()) - chern_of_line_bundle(model, -model.generator(1));
}

CohVector point_class(const ThreefoldModel& model) {
  CohVector v = zero_character(model);
  v.ch3 = Rational(1);
  return v;
}

namespace {

void require_product(const ThreefoldModel& model, const char* op) {
  if (!model.is_product()) throw UnsupportedError(std::string(op) + " is unsupported on the CY model");
}

void require_positive(long long a, long long b) {
  if (a <= 0 || b <= 0) throw PreconditionError("Frobenius/multiplication degrees must be positive");
}

// Scale of each basis divisor under f^(a,b)*.
std::vector<Rational> generator_scales(const ThreefoldModel& model, long long a, long long b) {
  std::vector<Rational> scale(model.rank(), Rational(1));
  for (std::size_t idx : model.toric_generators()) scale[idx] = Rational(a);
  for (std::size_t idx : model.abelian_generators()) scale[idx] = Rational(b * b);
  return scale;
}

}  // namespace

DivisorClass pullback_divisor(const ThreefoldModel& model, long long a, long long b, const DivisorClass& divisor) {
  require_product(model, "pullback_divisor");
  require_positive(a, b);
  const auto scale = generator_scales(model, a, b);
  DivisorClass out = divisor;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= scale[i];
  return out;
}

Rational frobenius_degree(const ThreefoldModel& model, long long a, long long b) {
  require_product(model, "frobenius_degree");
  require_positive(a, b);
  return Rational(a).pow(static_cast<unsigned>(model.toric().dimension)) *
         Rational(b).pow(static_cast<unsigned>(2 * model.abelian_dimension()));
}

CohVector frob_action(const ThreefoldModel& model, long long a, long long b, const CohVector& v) {
  require_product(model, "frob_action");
  const auto scale = generator_scales(model, a, b);
  const Rational degree = frobenius_degree(model, a, b);
  CohVector out = v;
  // f*x . G_i = f*x . f*(G_i / s_i) = deg(f)/s_i (x . G_i)
  for (std::size_t i = 0; i < model.rank(); ++i) {
    out.ch1[i] *= scale[i];
    out.ch2[i] *= degree / scale[i];
  }
  out.ch3 *= degree;
  return out;
}

Rational euler_char(const ThreefoldModel& model, const CohVector& v) {
  if (!model.is_product()) {
    // K_X = 0 but c2(X) is not modeled, so only ch3 can be integrated.
    if (v.ch0.is_zero() && v.ch1.is_zero()) return v.ch3;
    throw UnsupportedError("todd data unavailable on the CY model (needs ch0 = 0 and ch1 = 0)");
  }
  const CohVector& td = model.todd();
  return v.ch3 + pair(v.ch2, td.ch1) + pair(td.ch2, v.ch1) + v.ch0 * td.ch3;
}

PolynomialInM euler_polynomial(const ThreefoldModel& model, const CohVector& v) {
  require_product(model, "euler_polynomial");
  // f^(m^2,m) scales every basis divisor by m^2 and has degree m^6, so ch_k
  // picks up m^{2k}.
  const CohVector& td = model.todd();
  PolynomialInM p = PolynomialInM::monomial(v.ch3, 6);
  p += PolynomialInM::monomial(pair(v.ch2, td.ch1), 4);
  p += PolynomialInM::monomial(pair(td.ch2, v.ch1), 2);
  p += PolynomialInM(v.ch0 * td.ch3);
  return p;
}

DivisorClass canonical_divisor(const ThreefoldModel& model) {
  if (!model.is_product()) return model.zero();
  DivisorClass k = model.zero();
  for (const auto& d : model.torus_invariant_divisors()) k -= d;
  return k;
}

// ---------------------------------------------------------------------------

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  return s;
}

std::size_t generator_index(const ThreefoldModel& model, const std::string& name, std::string_view text) {
  const auto idx = model.index_of(name);
  if (!idx) {
    throw ParseError("unknown generator '" + name + "' in '" + std::string(text) + "' for model " + model.name());
  }
  return *idx;
}

}  // namespace

DivisorClass parse_divisor(const ThreefoldModel& model, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty divisor expression");
  DivisorClass out = model.zero();
  if (s.find(':') != std::string::npos) {
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t comma = s.find(',', start);
      const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw ParseError("expected name:coeff in '" + std::string(text) + "'");
      out[generator_index(model, item.substr(0, colon), text)] += Rational::parse(item.substr(colon + 1));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  // Linear expression: terms [sign][coeff[*]]name, coeff being p or p/q.
  std::size_t i = 0;
  if (s == "0") return out;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Rational coeff(1);
    if (j > i) coeff = Rational::parse(s.substr(i, j - i));
    if (j < s.size() && s[j] == '*') ++j;
    std::size_t k = j;
    while (k < s.size() && std::isalnum(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) {
      if (j > i && k == s.size()) throw ParseError("constant term in divisor expression '" + std::string(text) + "'");
      throw ParseError("malformed divisor expression '" + std::string(text) + "'");
    }
    out[generator_index(model, s.substr(j, k - j), text)] += coeff * Rational(sign);
    i = k;
  }
  return out;
}

std::string format_divisor(const ThreefoldModel& model, const DivisorClass& divisor) {
  std::string out;
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    if (divisor[i].is_zero()) continue;
    const Rational c = divisor[i];
    const std::string mag = c.abs() == Rational(1) ? "" : c.abs().str() + "*";
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + mag + model.generators()[i];
    } else {
      out += (c.sign() < 0 ? "-" : "+") + mag + model.generators()[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace tiltstab::geometry
