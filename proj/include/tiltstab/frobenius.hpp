#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltstab/geometry.hpp"
#include "tiltstab/quadratic.hpp"

namespace tiltstab::frobenius {

using geometry::DivisorClass;
using geometry::ThreefoldModel;
using geometry::ToricSurface;

/// Divisor on the toric factor Y in Picard coordinates.
using ToricDivisor = std::vector<long long>;

struct ToricSummand {
  ToricDivisor divisor;  // class of L_j^*
  std::uint64_t multiplicity = 0;
  friend bool operator==(const ToricSummand&, const ToricSummand&) = default;
};

/// m_* O(D) = (+)_j (L_j^*)^{eta_j} on Y.
struct FrobeniusDecomposition {
  ToricSurface surface = ToricSurface::P1;
  long long m = 1;
  ToricDivisor source;
  std::vector<ToricSummand> summands;

  std::uint64_t rank() const;
  /// Multiplicity of a given summand class, 0 if absent.
  std::uint64_t multiplicity_of(const ToricDivisor& divisor) const;
};

/// Thomsen splitting of the toric Frobenius pushforward. Residues are
/// aggregated per Picard coordinate, so the cost is linear in m per ray.
FrobeniusDecomposition thomsen_decompose(ToricSurface y, const ToricDivisor& divisor, long long m);

/// -K_Y - sum a_rho D_rho / m - sum D_rho / m is nef (so -K_Y - sum a_rho D_rho/m
/// is ample). `residue` has one entry per ray, each in [0, m-1].
bool remark_ample_margin(ToricSurface y, long long m, const std::vector<long long>& residue);

struct Summand {
  DivisorClass divisor;
  std::uint64_t multiplicity = 0;
};

struct PushforwardDecomposition {
  long long a = 1;
  DivisorClass source;
  std::vector<Summand> summands;
  std::uint64_t rank() const;
};

/// f^(a,1)_* O(D) on a product model: Thomsen on the Y-part, the Z-part rides along.
PushforwardDecomposition pushforward_line_bundle(const ThreefoldModel& model, long long a, const DivisorClass& divisor);

// --- vanishing-lemma verifier ------------------------------------------------

enum class VanishingCase { HomIntegral, Ext2Integral, HomRational, Ext2Rational, HomIrrational, Ext2Irrational };

std::string to_string(VanishingCase c);
VanishingCase parse_vanishing_case(std::string_view text);
bool is_hom_case(VanishingCase c);

struct VanishingParams {
  long long m = 1;  // integral and rational cases
  long long p = 0;  // rational: beta-bar = p/q; irrational: beta_n = p_n/q_n
  long long q = 1;
  long long u = 0;  // irrational cases; 0 selects the minimal admissible value
  long long v = 0;
  /// Irrational cases: when set, the Dirichlet condition |beta-bar - p/q| < 1/q^2
  /// and the two intersection inequalities at beta-bar are checked exactly.
  std::optional<QuadraticNumber> beta_bar;
  /// Defaults to the sum of the basis divisors (h + f).
  std::optional<DivisorClass> polarization;
};

struct ResidueFailure {
  std::vector<long long> a_sums;  // per Picard coordinate, sum of a_rho
  std::vector<long long> b_sums;  // second layer (rational cases), else empty
  DivisorClass offending;
  std::string reason;
};

struct VanishingReport {
  VanishingCase vanishing_case = VanishingCase::HomIntegral;
  VanishingParams params;  // u, v resolved
  DivisorClass polarization;
  /// Distinct aggregated residues (coordinate-sum vectors) that were checked.
  std::uint64_t residues_checked = 0;
  /// Number of residue tuples (a_rho[, b_rho]) those residues stand for.
  std::uint64_t tuples_covered = 0;
  /// H.D^2 >= 0 on effective classes, needed for tilt-stability of line bundles.
  bool line_bundle_hypothesis = false;
  std::vector<ResidueFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Throw PreconditionError on violated lemma hypotheses; when false the
  /// lemma is checked anyway and violations show up as residue failures.
  bool enforce_hypotheses = true;
  /// OpenMP thread count; 0 uses the runtime default.
  int threads = 0;
};

/// Smallest u with (u - 2) h + K_X effective (hom) or u > 2 (ext2).
long long minimal_admissible_u(const ThreefoldModel& model, const DivisorClass& polarization, VanishingCase c);
long long minimal_admissible_v(VanishingCase c);

/// Checks every Thomsen residue of the chosen lemma: the displayed class is
/// re-derived from the line bundles involved, compared to the simplified
/// form, and tested for ampleness (hom) or anti-ampleness (ext2).
VanishingReport verify_vanishing(const ThreefoldModel& model, VanishingCase c, const VanishingParams& params,
                                 const VerifyOptions& options = {});

namespace reference {

/// Enumerates every residue tuple a_rho (and b_rho) one at a time on a single
/// thread. Exponential in the number of rays; used to cross-check the
/// aggregated kernels.
FrobeniusDecomposition thomsen_decompose_tuples(ToricSurface y, const ToricDivisor& divisor, long long m);
VanishingReport verify_vanishing_serial(const ThreefoldModel& model, VanishingCase c, const VanishingParams& params,
                                        const VerifyOptions& options = {});

}  // namespace reference

}  // namespace tiltstab::frobenius
