#pragma once

// Lemma-specific algebra shared by the aggregated kernel and the serial
// tuple-enumerating reference.

#include <optional>
#include <vector>

#include "tiltstab/frobenius.hpp"

namespace tiltstab::frobenius::detail {

struct LemmaContext {
  const ThreefoldModel* model = nullptr;
  VanishingCase vanishing_case = VanishingCase::HomIntegral;
  VanishingParams params;
  DivisorClass polarization;
  DivisorClass h;         // toric part of H
  DivisorClass f;         // abelian part of H
  DivisorClass canonical; // K_X
  DivisorClass anticanonical;
  long long layer1_modulus = 1;
  long long layer2_modulus = 0;  // 0: single layer
  /// Thomsen source of the first pushforward, as a divisor on X (Y-part only).
  DivisorClass layer1_source;
  /// Pulled-back polarization used for the twist (h + (mq)^2 f or h + q^2 f).
  DivisorClass twisted_polarization;
  Rational beta;  // twist parameter p/q (0 in the integral case)
  std::optional<ResidueFailure> global_failure;
};

/// Validates hypotheses and resolves defaults (u, v, H).
LemmaContext make_context(const ThreefoldModel& model, VanishingCase c, const VanishingParams& params,
                          const VerifyOptions& options);

/// L_j = (-source + A) / modulus, or nullopt when not integral.
std::optional<DivisorClass> layer1_bundle(const LemmaContext& ctx, const DivisorClass& a_class);
/// R = (-(p q h - L) + B) / q^2 for the rational cases, or nullopt when not integral.
std::optional<DivisorClass> layer2_bundle(const LemmaContext& ctx, const DivisorClass& layer1, const DivisorClass& b_class);

/// Checks one aggregated residue. a_class = sum a_rho D_rho, b_class likewise.
std::optional<ResidueFailure> evaluate_residue(const LemmaContext& ctx, const DivisorClass& a_class,
                                               const DivisorClass& layer1, const std::optional<DivisorClass>& b_class,
                                               const std::optional<DivisorClass>& layer2);

std::vector<long long> integer_coordinates(const ThreefoldModel& model, const DivisorClass& toric_class);

}  // namespace tiltstab::frobenius::detail
