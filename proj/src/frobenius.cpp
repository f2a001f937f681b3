#include "tiltstab/frobenius.hpp"

#include <exception>
#include <map>

#include <omp.h>

#include "frobenius_detail.hpp"
#include "tiltstab/errors.hpp"

namespace tiltstab::frobenius {

std::uint64_t FrobeniusDecomposition::rank() const {
  std::uint64_t r = 0;
  for (const auto& s : summands) r += s.multiplicity;
  return r;
}

std::uint64_t FrobeniusDecomposition::multiplicity_of(const ToricDivisor& divisor) const {
  for (const auto& s : summands) {
    if (s.divisor == divisor) return s.multiplicity;
  }
  return 0;
}

std::uint64_t PushforwardDecomposition::rank() const {
  std::uint64_t r = 0;
  for (const auto& s : summands) r += s.multiplicity;
  return r;
}

namespace {

bool divides(long long n, long long x) { return x % n == 0; }

/// counts[s] = #{a in [0, n-1]^rays : sum a = s}.
std::vector<std::uint64_t> residue_sum_counts(int rays, long long n) {
  std::vector<std::uint64_t> counts{1};
  for (int r = 0; r < rays; ++r) {
    std::vector<std::uint64_t> next(counts.size() + static_cast<std::size_t>(n - 1), 0);
    // sliding window sum over the last n entries
    std::uint64_t window = 0;
    for (std::size_t s = 0; s < next.size(); ++s) {
      if (s < counts.size()) window += counts[s];
      if (s >= static_cast<std::size_t>(n) && s - n < counts.size()) window -= counts[s - n];
      next[s] = window;
    }
    counts = std::move(next);
  }
  return counts;
}

struct CoordinateSums {
  std::vector<std::vector<long long>> sums;  // admissible sums per coordinate
  std::vector<std::vector<std::uint64_t>> counts;
};

/// Residue sums per Picard coordinate with (sum - source_c) divisible by n.
CoordinateSums admissible_sums(const geometry::ToricFactorData& y, long long n, const std::vector<long long>& source) {
  CoordinateSums out;
  for (std::size_t c = 0; c < y.coordinates(); ++c) {
    const auto counts = residue_sum_counts(y.rays_per_coordinate[c], n);
    std::vector<long long> sums;
    std::vector<std::uint64_t> mult;
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] != 0 && divides(n, static_cast<long long>(s) - source[c])) {
        sums.push_back(static_cast<long long>(s));
        mult.push_back(counts[s]);
      }
    }
    out.sums.push_back(std::move(sums));
    out.counts.push_back(std::move(mult));
  }
  return out;
}

/// Cartesian product of the per-coordinate lists, lexicographic.
template <class F>
void for_each_combination(const CoordinateSums& cs, F&& fn) {
  const std::size_t k = cs.sums.size();
  for (const auto& s : cs.sums) {
    if (s.empty()) return;
  }
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<long long> sums(k);
    std::uint64_t mult = 1;
    for (std::size_t c = 0; c < k; ++c) {
      sums[c] = cs.sums[c][idx[c]];
      mult *= cs.counts[c][idx[c]];
    }
    fn(sums, mult);
    std::size_t c = k;
    while (c > 0) {
      --c;
      if (++idx[c] < cs.sums[c].size()) break;
      idx[c] = 0;
      if (c == 0) return;
    }
    if (k == 0) return;
  }
}

std::vector<long long> integral_toric_coordinates(const ThreefoldModel& model, const DivisorClass& d) {
  std::vector<long long> out;
  for (const auto& c : model.toric_coordinates(d)) {
    if (!c.is_integer()) throw PreconditionError("Frobenius pushforward needs an integral divisor on Y");
    out.push_back(c.to_int64());
  }
  return out;
}

DivisorClass lift(const ThreefoldModel& model, const std::vector<long long>& coords) {
  std::vector<Rational> r;
  for (long long c : coords) r.emplace_back(c);
  return model.from_toric_coordinates(r);
}

}  // namespace

FrobeniusDecomposition thomsen_decompose(ToricSurface y, const ToricDivisor& divisor, long long m) {
  if (m < 1) throw PreconditionError("Frobenius degree must be a positive integer");
  const auto data = geometry::toric_factor_data(y);
  if (divisor.size() != data.coordinates()) throw PreconditionError("divisor has the wrong number of Picard coordinates");
  FrobeniusDecomposition out;
  out.surface = y;
  out.m = m;
  out.source = divisor;
  const auto cs = admissible_sums(data, m, divisor);
  for_each_combination(cs, [&](const std::vector<long long>& sums, std::uint64_t mult) {
    ToricDivisor d(sums.size());
    for (std::size_t c = 0; c < sums.size(); ++c) d[c] = (divisor[c] - sums[c]) / m;
    out.summands.push_back({std::move(d), mult});
  });
  return out;
}

bool remark_ample_margin(ToricSurface y, long long m, const std::vector<long long>& residue) {
  if (m < 1) throw PreconditionError("m must be a positive integer");
  const auto data = geometry::toric_factor_data(y);
  if (residue.size() != static_cast<std::size_t>(data.total_rays())) {
    throw PreconditionError("expected one residue per ray");
  }
  std::size_t ray = 0;
  for (std::size_t c = 0; c < data.coordinates(); ++c) {
    const int rays = data.rays_per_coordinate[c];
    long long sum = 0;
    for (int r = 0; r < rays; ++r, ++ray) {
      if (residue[ray] < 0 || residue[ray] >= m) throw PreconditionError("residues must lie in [0, m-1]");
      sum += residue[ray];
    }
    // rays - sum/m - rays/m >= 0
    if (Rational(rays) - Rational(sum + rays, m) < Rational(0)) return false;
  }
  return true;
}

PushforwardDecomposition pushforward_line_bundle(const ThreefoldModel& model, long long a, const DivisorClass& divisor) {
  if (!model.is_product()) throw UnsupportedError("Frobenius pushforward needs a product model");
  const auto coords = integral_toric_coordinates(model, divisor);
  const auto toric = thomsen_decompose(model.toric().surface, coords, a);
  PushforwardDecomposition out;
  out.a = a;
  out.source = divisor;
  const DivisorClass rides_along = model.abelian_part(divisor);
  for (const auto& s : toric.summands) out.summands.push_back({lift(model, s.divisor) + rides_along, s.multiplicity});
  return out;
}

std::string to_string(VanishingCase c) {
  switch (c) {
    case VanishingCase::HomIntegral: return "hom_integral";
    case VanishingCase::Ext2Integral: return "ext2_integral";
    case VanishingCase::HomRational: return "hom_rational";
    case VanishingCase::Ext2Rational: return "ext2_rational";
    case VanishingCase::HomIrrational: return "hom_irrational";
    case VanishingCase::Ext2Irrational: return "ext2_irrational";
  }
  return "?";
}

VanishingCase parse_vanishing_case(std::string_view text) {
  for (auto c : {VanishingCase::HomIntegral, VanishingCase::Ext2Integral, VanishingCase::HomRational,
                 VanishingCase::Ext2Rational, VanishingCase::HomIrrational, VanishingCase::Ext2Irrational}) {
    if (text == to_string(c)) return c;
  }
  throw ParseError("unknown vanishing case '" + std::string(text) + "'");
}

bool is_hom_case(VanishingCase c) {
  return c == VanishingCase::HomIntegral || c == VanishingCase::HomRational || c == VanishingCase::HomIrrational;
}

long long minimal_admissible_u(const ThreefoldModel& model, const DivisorClass& polarization, VanishingCase c) {
  if (!is_hom_case(c)) return 3;
  const DivisorClass h = model.toric_part(polarization);
  if (h.is_zero()) throw PreconditionError("polarization has no toric part");
  const DivisorClass k = geometry::canonical_divisor(model);
  for (long long u = 1; u < 10000; ++u) {
    if (geometry::is_effective(model, Rational(u - 2) * h + k)) return u;
  }
  throw PreconditionError("no admissible u found");
}

long long minimal_admissible_v(VanishingCase) { return 3; }

namespace {

struct WorkItem {
  DivisorClass a_class;
  DivisorClass layer1;
  std::optional<DivisorClass> b_class;
  std::optional<DivisorClass> layer2;
  std::uint64_t tuples = 0;
};

}  // namespace

VanishingReport verify_vanishing(const ThreefoldModel& model, VanishingCase c, const VanishingParams& params,
                                 const VerifyOptions& options) {
  auto ctx = detail::make_context(model, c, params, options);
  VanishingReport report;
  report.vanishing_case = c;
  report.params = ctx.params;
  report.polarization = ctx.polarization;
  report.line_bundle_hypothesis = geometry::check_negative_divisor_hypothesis(model, ctx.polarization);
  if (ctx.global_failure) report.failures.push_back(*ctx.global_failure);

  const auto& y = model.toric();
  const auto source1 = integral_toric_coordinates(model, ctx.layer1_source);
  const auto first = admissible_sums(y, ctx.layer1_modulus, source1);

  std::vector<WorkItem> items;
  for_each_combination(first, [&](const std::vector<long long>& a_sums, std::uint64_t mult_a) {
    const DivisorClass a_class = lift(model, a_sums);
    auto layer1 = detail::layer1_bundle(ctx, a_class);
    if (!layer1) throw std::logic_error("residue filter and integrality disagree");
    if (ctx.layer2_modulus == 0) {
      items.push_back({a_class, *layer1, std::nullopt, std::nullopt, mult_a});
      return;
    }
    const DivisorClass source2 = Rational(ctx.params.p * ctx.params.q) * ctx.h - *layer1;
    const auto second = admissible_sums(y, ctx.layer2_modulus, integral_toric_coordinates(model, source2));
    for_each_combination(second, [&](const std::vector<long long>& b_sums, std::uint64_t mult_b) {
      const DivisorClass b_class = lift(model, b_sums);
      auto layer2 = detail::layer2_bundle(ctx, *layer1, b_class);
      if (!layer2) throw std::logic_error("residue filter and integrality disagree");
      items.push_back({a_class, *layer1, b_class, *layer2, mult_a * mult_b});
    });
  });

  const long long n = static_cast<long long>(items.size());
  std::vector<std::optional<ResidueFailure>> results(items.size());
  std::exception_ptr error;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    try {
      const auto& it = items[static_cast<std::size_t>(i)];
      results[static_cast<std::size_t>(i)] = detail::evaluate_residue(ctx, it.a_class, it.layer1, it.b_class, it.layer2);
    } catch (...) {
#pragma omp critical(tiltstab_verify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < items.size(); ++i) {
    report.residues_checked += 1;
    report.tuples_covered += items[i].tuples;
    if (results[i]) report.failures.push_back(std::move(*results[i]));
  }
  return report;
}

}  // namespace tiltstab::frobenius
