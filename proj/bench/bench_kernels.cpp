// Serial reference vs OpenMP kernels. Thread count is the second range argument.
#include <benchmark/benchmark.h>

#include "tiltstab/frobenius.hpp"
#include "tiltstab/walls.hpp"

using namespace tiltstab;

namespace {

frobenius::VanishingParams rational_params() {
  frobenius::VanishingParams p;
  p.m = 3;
  p.p = 1;
  p.q = 3;
  return p;
}

const auto kModel = geometry::ThreefoldModel::p1_x_p1_x_elliptic_curve();

void BM_VerifySerial(benchmark::State& state) {
  const auto p = rational_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius::reference::verify_vanishing_serial(kModel, frobenius::VanishingCase::HomRational, p));
  }
}
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
  const auto p = rational_params();
  frobenius::VerifyOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius::verify_vanishing(kModel, frobenius::VanishingCase::HomRational, p, opt));
  }
}
BENCHMARK(BM_VerifyParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ThomsenTuples(benchmark::State& state) {
  const long long m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius::reference::thomsen_decompose_tuples(geometry::ToricSurface::P1xP1, {3, -2}, m));
  }
}
BENCHMARK(BM_ThomsenTuples)->Arg(4)->Arg(8)->Arg(16);

void BM_ThomsenAggregated(benchmark::State& state) {
  const long long m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius::thomsen_decompose(geometry::ToricSurface::P1xP1, {3, -2}, m));
  }
}
BENCHMARK(BM_ThomsenAggregated)->Arg(4)->Arg(8)->Arg(16);

const auto kCharacter = chern::ProjectedChern::parse("3,3,3/2,1/2");

void BM_ScanSerial(benchmark::State& state) {
  const auto box = walls::CharacterBox::symmetric(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(walls::reference::destabilizer_scan_serial(kCharacter, box));
}
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  const auto box = walls::CharacterBox::symmetric(3, 2);
  walls::ScanOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(walls::destabilizer_scan(kCharacter, box, opt));
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
