#include <benchmark/benchmark.h>

#include "twh/b_tilde.hpp"
#include "twh/factorization.hpp"
#include "twh/interpolation.hpp"
#include "twh/tropical.hpp"

namespace {

void BM_FlagshipBruteForce(benchmark::State& state) {
  const twh::HurwitzInput input{1, twh::Partition({4}), twh::Partition({2, 2}), true};
  twh::ScanOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(twh::twisted_hurwitz_bruteforce(input, options));
}
BENCHMARK(BM_FlagshipBruteForce)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_FlagshipTropical(benchmark::State& state) {
  const std::vector<int> mu{4};
  const std::vector<int> nu{2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(twh::twisted_hurwitz_tropical(1, mu, nu));
}
BENCHMARK(BM_FlagshipTropical)->Unit(benchmark::kMicrosecond);

void BM_TropicalGenusOne(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<int> mu{d};
  const std::vector<int> nu{d / 2, d - d / 2 - 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(twh::labeled_twisted_hurwitz(1, mu, nu));
}
BENCHMARK(BM_TropicalGenusOne)->Arg(6)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_EnumerateBTilde(benchmark::State& state) {
  const twh::Partition lambda({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(twh::enumerate_b_tilde(lambda));
}
BENCHMARK(BM_EnumerateBTilde)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_InterpolateGenusZero(benchmark::State& state) {
  twh::InterpolationOptions options;
  options.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(twh::interpolate_chamber(0, 1, 3, twh::ChamberSignature{}, options));
  }
}
BENCHMARK(BM_InterpolateGenusZero)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
