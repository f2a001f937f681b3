#include <map>

#include "frobenius_detail.hpp"
#include "tiltstab/errors.hpp"

namespace tiltstab::frobenius::reference {

namespace {

/// Visits every tuple in [0, n-1]^rays, passing per-coordinate sums.
template <class F>
void for_each_tuple(const geometry::ToricFactorData& y, long long n, F&& fn) {
  const int rays = y.total_rays();
  std::vector<long long> a(static_cast<std::size_t>(rays), 0);
  while (true) {
    std::vector<long long> sums(y.coordinates(), 0);
    std::size_t ray = 0;
    for (std::size_t c = 0; c < y.coordinates(); ++c) {
      for (int r = 0; r < y.rays_per_coordinate[c]; ++r) sums[c] += a[ray++];
    }
    fn(sums);
    int i = rays - 1;
    while (i >= 0 && ++a[static_cast<std::size_t>(i)] == n) a[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

DivisorClass lift(const ThreefoldModel& model, const std::vector<long long>& coords) {
  std::vector<Rational> r;
  for (long long c : coords) r.emplace_back(c);
  return model.from_toric_coordinates(r);
}

}  // namespace

FrobeniusDecomposition thomsen_decompose_tuples(ToricSurface y, const ToricDivisor& divisor, long long m) {
  if (m < 1) throw PreconditionError("Frobenius degree must be a positive integer");
  const auto data = geometry::toric_factor_data(y);
  if (divisor.size() != data.coordinates()) throw PreconditionError("divisor has the wrong number of Picard coordinates");
  std::map<ToricDivisor, std::uint64_t> found;
  for_each_tuple(data, m, [&](const std::vector<long long>& sums) {
    ToricDivisor d(sums.size());
    for (std::size_t c = 0; c < sums.size(); ++c) {
      const long long diff = divisor[c] - sums[c];
      if (diff % m != 0) return;
      d[c] = diff / m;
    }
    ++found[d];
  });
  FrobeniusDecomposition out;
  out.surface = y;
  out.m = m;
  out.source = divisor;
  // larger residue sums give smaller summands; emit in residue-sum order
  for (auto it = found.rbegin(); it != found.rend(); ++it) out.summands.push_back({it->first, it->second});
  return out;
}

VanishingReport verify_vanishing_serial(const ThreefoldModel& model, VanishingCase c, const VanishingParams& params,
                                        const VerifyOptions& options) {
  auto ctx = detail::make_context(model, c, params, options);
  VanishingReport report;
  report.vanishing_case = c;
  report.params = ctx.params;
  report.polarization = ctx.polarization;
  report.line_bundle_hypothesis = geometry::check_negative_divisor_hypothesis(model, ctx.polarization);
  if (ctx.global_failure) report.failures.push_back(*ctx.global_failure);

  using Key = std::pair<std::vector<long long>, std::vector<long long>>;
  std::map<Key, std::uint64_t> seen;
  std::map<Key, ResidueFailure> failed;
  const auto& y = model.toric();

  auto record = [&](const Key& key, std::optional<ResidueFailure> f) {
    ++seen[key];
    if (f) failed.emplace(key, std::move(*f));
  };

  for_each_tuple(y, ctx.layer1_modulus, [&](const std::vector<long long>& a_sums) {
    const DivisorClass a_class = lift(model, a_sums);
    const auto layer1 = detail::layer1_bundle(ctx, a_class);
    if (!layer1) return;
    if (ctx.layer2_modulus == 0) {
      record({a_sums, {}}, detail::evaluate_residue(ctx, a_class, *layer1, std::nullopt, std::nullopt));
      return;
    }
    for_each_tuple(y, ctx.layer2_modulus, [&](const std::vector<long long>& b_sums) {
      const DivisorClass b_class = lift(model, b_sums);
      const auto layer2 = detail::layer2_bundle(ctx, *layer1, b_class);
      if (!layer2) return;
      record({a_sums, b_sums}, detail::evaluate_residue(ctx, a_class, *layer1, b_class, *layer2));
    });
  });

  for (const auto& [key, count] : seen) {
    report.residues_checked += 1;
    report.tuples_covered += count;
    if (auto it = failed.find(key); it != failed.end()) report.failures.push_back(it->second);
  }
  return report;
}

}  // namespace tiltstab::frobenius::reference
