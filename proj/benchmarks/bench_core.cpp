#include <benchmark/benchmark.h>

#include "vcpack/constructions.hpp"
#include "vcpack/entropy.hpp"
#include "vcpack/experiments.hpp"
#include "vcpack/family.hpp"
#include "vcpack/interval.hpp"
#include "vcpack/rng.hpp"

namespace {

using namespace vcpack;

void BM_EntropyInterval(benchmark::State& state) {
  const long prec = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_interval(3, 17, prec));
  }
}
BENCHMARK(BM_EntropyInterval)->Arg(128)->Arg(256)->Arg(1024);

void BM_LemmaBinom(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lemma_binom(n, n / 2));
  }
}
BENCHMARK(BM_LemmaBinom)->Arg(20)->Arg(100)->Arg(200);

void BM_LemmaSweep(benchmark::State& state) {
  const long n_max = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma_sweep(n_max, {}));
  }
}
BENCHMARK(BM_LemmaSweep)->Arg(30)->Arg(60);

FunctionClass random_class(int n, int m, std::uint64_t seed) {
  RandomSource rnd(seed);
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < m; ++i) {
    std::vector<std::uint8_t> r(n);
    for (auto& c : r) c = rnd.next_bit() ? 1 : 0;
    rows.push_back(std::move(r));
  }
  return FunctionClass(2, n, std::move(rows), true);
}

void BM_VcDimension(benchmark::State& state) {
  const auto fc = random_class(static_cast<int>(state.range(0)), 32, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fc.vc_dimension());
  }
}
BENCHMARK(BM_VcDimension)->Arg(10)->Arg(14);

void BM_PackingNumber(benchmark::State& state) {
  const auto fc = random_class(16, static_cast<int>(state.range(0)), 13);
  const Rational eps(1, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(packing_number(fc, eps));
  }
}
BENCHMARK(BM_PackingNumber)->Arg(16)->Arg(32)->Arg(48);

void BM_ProjectionExhaustive(benchmark::State& state) {
  const auto fc = random_class(static_cast<int>(state.range(0)), 24, 3);
  const int r = fc.n() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        projection_collision(fc, r, CollisionMode::Exhaustive));
  }
}
BENCHMARK(BM_ProjectionExhaustive)->Arg(8)->Arg(12);

void BM_SylvesterGammaOrth(benchmark::State& state) {
  const auto h = sylvester_hadamard(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h.gamma_orth());
  }
}
BENCHMARK(BM_SylvesterGammaOrth)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
