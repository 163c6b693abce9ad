#include <benchmark/benchmark.h>

#include <random>

#include "umeb/verify.hpp"

using namespace umeb;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  Cyclo::Coefficients c{};
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyclo(c);
}

void BM_CycloMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Cyclo a = random_cyclo(rng);
  const Cyclo b = random_cyclo(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul);

void BM_CycloInv(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Cyclo a = random_cyclo(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycloInv);

void BM_ExactMutuallyUnbiased(benchmark::State& state) {
  const auto p = sample_valid_params(3, 1, SampleMode::PiOver12).front();
  const auto pair = construct_pair(p, FirstBasisSpec<Cyclo>::chen());
  for (auto _ : state) benchmark::DoNotOptimize(check_mutually_unbiased(pair.first, pair.second));
}
BENCHMARK(BM_ExactMutuallyUnbiased)->Unit(benchmark::kMillisecond);

void BM_ExactVerifyPair(benchmark::State& state) {
  const auto p = sample_valid_params(3, 1, SampleMode::PiOver12).front();
  const auto pair = construct_pair(p, FirstBasisSpec<Cyclo>::chen());
  VerifyOptions o;
  o.run_grid_oracle = false;
  for (auto _ : state) benchmark::DoNotOptimize(verify_pair(pair, o));
}
BENCHMARK(BM_ExactVerifyPair)->Unit(benchmark::kMillisecond);

void BM_GridScan(benchmark::State& state) {
  const auto b = build_first_basis(FirstBasisSpec<Complex>::chen());
  GridOptions g;
  g.nt = static_cast<int>(state.range(0));
  g.nphi = 2 * (g.nt - 1);
  for (auto _ : state) benchmark::DoNotOptimize(scan_complement(b[4], b[0], g));
}
BENCHMARK(BM_GridScan)->Arg(46)->Arg(91)->Arg(181)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
