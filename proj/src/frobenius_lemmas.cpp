#include <numeric>

#include "frobenius_detail.hpp"
#include "tiltstab/errors.hpp"

namespace tiltstab::frobenius::detail {

using geometry::intersect3;
using geometry::is_ample;
using geometry::is_anti_ample;
using geometry::is_nef;

namespace {

bool is_integral_divisor(const DivisorClass& d) {
  for (const auto& c : d.coefficients()) {
    if (!c.is_integer()) return false;
  }
  return true;
}

void hypothesis(bool ok, const std::string& message, const VerifyOptions& options, LemmaContext& ctx) {
  if (ok) return;
  if (options.enforce_hypotheses) throw PreconditionError(message);
  if (!ctx.global_failure) ctx.global_failure = ResidueFailure{{}, {}, ctx.model->zero(), message};
}

}  // namespace

std::vector<long long> integer_coordinates(const ThreefoldModel& model, const DivisorClass& toric_class) {
  std::vector<long long> out;
  for (const auto& c : model.toric_coordinates(toric_class)) out.push_back(c.to_int64());
  return out;
}

LemmaContext make_context(const ThreefoldModel& model, VanishingCase c, const VanishingParams& params,
                          const VerifyOptions& options) {
  if (!model.is_product()) throw UnsupportedError("vanishing lemmas are stated for the product models only");
  LemmaContext ctx;
  ctx.model = &model;
  ctx.vanishing_case = c;
  ctx.params = params;
  ctx.polarization = params.polarization.value_or(model.sum_of_generators());
  if (!is_ample(model, ctx.polarization)) {
    throw PreconditionError("polarization " + geometry::format_divisor(model, ctx.polarization) + " is not ample");
  }
  if (!is_integral_divisor(ctx.polarization)) {
    throw PreconditionError("polarization must be an integral divisor for the Frobenius splitting");
  }
  ctx.h = model.toric_part(ctx.polarization);
  ctx.f = model.abelian_part(ctx.polarization);
  ctx.canonical = geometry::canonical_divisor(model);
  ctx.anticanonical = -ctx.canonical;
  auto& pr = ctx.params;

  switch (c) {
    case VanishingCase::HomIntegral:
    case VanishingCase::Ext2Integral:
      if (pr.m < 1) throw PreconditionError("m must be a positive integer");
      ctx.layer1_modulus = pr.m * pr.m;
      // hom: f^(m^2,1)_* O(f); ext2: f^(m^2,1)_* O(-h + K_X)
      ctx.layer1_source = c == VanishingCase::HomIntegral ? model.zero() : -ctx.h + ctx.canonical;
      ctx.twisted_polarization = geometry::pullback_divisor(model, 1, pr.m, ctx.polarization);
      ctx.beta = Rational(0);
      break;
    case VanishingCase::HomRational:
    case VanishingCase::Ext2Rational:
      if (pr.m < 1) throw PreconditionError("m must be a positive integer");
      if (pr.q < 1) throw PreconditionError("q must be a positive integer");
      if (std::gcd(pr.p, pr.q) != 1) throw PreconditionError("p and q must be coprime");
      ctx.layer1_modulus = pr.m * pr.m;
      ctx.layer2_modulus = pr.q * pr.q;
      ctx.layer1_source = c == VanishingCase::HomRational ? model.zero() : -ctx.h + ctx.canonical;
      ctx.twisted_polarization = geometry::pullback_divisor(model, 1, pr.m * pr.q, ctx.polarization);
      ctx.beta = Rational(pr.p, pr.q);
      break;
    case VanishingCase::HomIrrational:
    case VanishingCase::Ext2Irrational: {
      if (pr.q < 1) throw PreconditionError("q_n must be a positive integer");
      if (pr.u == 0) pr.u = minimal_admissible_u(model, ctx.polarization, c);
      if (pr.v == 0) pr.v = minimal_admissible_v(c);
      if (pr.u < 1 || pr.v < 1) throw PreconditionError("u and v must be positive integers");
      hypothesis(pr.v > 2, "hypothesis violated: v > 2", options, ctx);
      if (c == VanishingCase::HomIrrational) {
        hypothesis(geometry::is_effective(model, Rational(pr.u - 2) * ctx.h + ctx.canonical),
                   "hypothesis violated: (u-2)h+K_X is effective", options, ctx);
      } else {
        hypothesis(pr.u > 2, "hypothesis violated: u > 2", options, ctx);
      }
      ctx.layer1_modulus = pr.q * pr.q;
      const Rational pq(pr.p * pr.q);
      // hom: D = (p q + u) h + K_X; ext2: D = (p q - u) h + K_X
      ctx.layer1_source = c == VanishingCase::HomIrrational ? (pq + Rational(pr.u)) * ctx.h + ctx.canonical
                                                            : (pq - Rational(pr.u)) * ctx.h + ctx.canonical;
      ctx.twisted_polarization = geometry::pullback_divisor(model, 1, pr.q, ctx.polarization);
      ctx.beta = Rational(pr.p, pr.q);
      if (pr.beta_bar) {
        const Rational bound(1, pr.q * pr.q);
        const bool dirichlet = (*pr.beta_bar - QuadraticNumber(ctx.beta)).abs() < QuadraticNumber(bound);
        hypothesis(dirichlet, "hypothesis violated: |beta-bar - p_n/q_n| < 1/q_n^2", options, ctx);
      }
      break;
    }
  }
  return ctx;
}

std::optional<DivisorClass> layer1_bundle(const LemmaContext& ctx, const DivisorClass& a_class) {
  DivisorClass l = (a_class - ctx.layer1_source) / Rational(ctx.layer1_modulus);
  if (!is_integral_divisor(l)) return std::nullopt;
  return l;
}

std::optional<DivisorClass> layer2_bundle(const LemmaContext& ctx, const DivisorClass& layer1, const DivisorClass& b_class) {
  // Second pushforward of O(p q h) (x) L_j^*.
  const DivisorClass source = Rational(ctx.params.p * ctx.params.q) * ctx.h - layer1;
  DivisorClass r = (b_class - source) / Rational(ctx.layer2_modulus);
  if (!is_integral_divisor(r)) return std::nullopt;
  return r;
}

namespace {

ResidueFailure failure(const LemmaContext& ctx, const DivisorClass& a_class, const std::optional<DivisorClass>& b_class,
                       const DivisorClass& offending, std::string reason) {
  ResidueFailure out;
  out.a_sums = integer_coordinates(*ctx.model, a_class);
  if (b_class) out.b_sums = integer_coordinates(*ctx.model, *b_class);
  out.offending = offending;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

std::optional<ResidueFailure> evaluate_residue(const LemmaContext& ctx, const DivisorClass& a_class,
                                               const DivisorClass& layer1, const std::optional<DivisorClass>& b_class,
                                               const std::optional<DivisorClass>& layer2) {
  const ThreefoldModel& model = *ctx.model;
  const auto& pr = ctx.params;
  const DivisorClass& h = ctx.h;
  const DivisorClass& f = ctx.f;
  const DivisorClass& k = ctx.canonical;
  const DivisorClass& sum_d = ctx.anticanonical;
  const bool hom = is_hom_case(ctx.vanishing_case);

  DivisorClass derived;     // class computed from the bundles involved
  DivisorClass simplified;  // closed form after cancellation
  std::optional<DivisorClass> lower_bound;

  switch (ctx.vanishing_case) {
    case VanishingCase::HomIntegral: {
      const Rational m2(pr.m * pr.m);
      derived = -k + f - layer1;  // ch1(O(-K_X + f) (x) L_j^*)
      simplified = f - k - a_class / m2;
      lower_bound = f + sum_d / m2;
      break;
    }
    case VanishingCase::Ext2Integral: {
      const Rational m2(pr.m * pr.m);
      derived = -f - layer1;  // ch1(O(-f) (x) L_j^*)
      simplified = -f - (h - k + a_class) / m2;
      break;
    }
    case VanishingCase::HomRational: {
      const Rational m2q2(pr.m * pr.m * pr.q * pr.q);
      const Rational pqm2(pr.p * pr.q * pr.m * pr.m);
      derived = pqm2 * f + f - k - *layer2 - ctx.beta * ctx.twisted_polarization;
      simplified = f - k - a_class / m2q2 - *b_class / Rational(pr.q * pr.q);
      lower_bound = f + sum_d / m2q2;
      break;
    }
    case VanishingCase::Ext2Rational: {
      const Rational m2q2(pr.m * pr.m * pr.q * pr.q);
      const Rational pqm2(pr.p * pr.q * pr.m * pr.m);
      derived = pqm2 * f - f - *layer2 - ctx.beta * ctx.twisted_polarization;
      simplified = -f - (h - k + a_class) / m2q2 - *b_class / Rational(pr.q * pr.q);
      break;
    }
    case VanishingCase::HomIrrational: {
      const Rational q2(pr.q * pr.q);
      const DivisorClass bundle = Rational(pr.p * pr.q + pr.v) * f - k - layer1;  // ch1(M_j)
      derived = bundle - ctx.beta * ctx.twisted_polarization - (Rational(2) / q2) * ctx.twisted_polarization;
      simplified = Rational(pr.v - 2) * f - k - a_class / q2 + (Rational(pr.u - 2) * h + k) / q2;
      break;
    }
    case VanishingCase::Ext2Irrational: {
      const Rational q2(pr.q * pr.q);
      const DivisorClass bundle = Rational(pr.p * pr.q - pr.v) * f - layer1;
      derived = bundle - ctx.beta * ctx.twisted_polarization + (Rational(2) / q2) * ctx.twisted_polarization;
      simplified = -(Rational(pr.v - 2) * f) - (Rational(pr.u - 2) * h - k + a_class) / q2;
      break;
    }
  }

  if (derived != simplified) {
    return failure(ctx, a_class, b_class, derived, "simplification mismatch with " + geometry::format_divisor(model, simplified));
  }
  if (hom ? !is_ample(model, derived) : !is_anti_ample(model, derived)) {
    return failure(ctx, a_class, b_class, derived, hom ? "class is not ample" : "class is not anti-ample");
  }
  if (lower_bound && !is_nef(model, derived - *lower_bound)) {
    return failure(ctx, a_class, b_class, derived, "class lies below " + geometry::format_divisor(model, *lower_bound));
  }

  if (pr.beta_bar && (ctx.vanishing_case == VanishingCase::HomIrrational ||
                      ctx.vanishing_case == VanishingCase::Ext2Irrational)) {
    // ch1^{beta-bar}(M_j) = ch1^{beta_n}(M_j) + (beta_n - beta-bar) H^(n)
    const Rational q2(pr.q * pr.q);
    const DivisorClass& hn = ctx.twisted_polarization;
    const DivisorClass at_beta_n = derived + (hom ? Rational(2) : Rational(-2)) / q2 * hn;
    const QuadraticNumber t = QuadraticNumber(ctx.beta) - *pr.beta_bar;
    const QuadraticNumber hhh(intersect3(model, hn, hn, hn));
    const QuadraticNumber hhc(intersect3(model, hn, hn, at_beta_n));
    const QuadraticNumber hcc(intersect3(model, hn, at_beta_n, at_beta_n));
    const QuadraticNumber degree_term = hhc + t * hhh;
    const QuadraticNumber square_term = hcc + QuadraticNumber(2) * t * hhc + t * t * hhh;
    if (hom ? degree_term.sign() <= 0 : degree_term.sign() >= 0) {
      return failure(ctx, a_class, b_class, at_beta_n,
                     std::string("H^(n)^2.ch1^{beta-bar}(M_j) is not ") + (hom ? "positive" : "negative"));
    }
    if (square_term.sign() <= 0) {
      return failure(ctx, a_class, b_class, at_beta_n, "H^(n).ch1^{beta-bar}(M_j)^2 is not positive");
    }
  }
  return std::nullopt;
}

}  // namespace tiltstab::frobenius::detail
