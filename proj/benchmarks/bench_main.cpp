#include <benchmark/benchmark.h>

#include <random>

#include "sstower/growth.hpp"
#include "sstower/local_module.hpp"
#include "sstower/smith.hpp"
#include "sstower/tower.hpp"

namespace {

sstower::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-50, 50);
  sstower::IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
  return a;
}

void bm_smith(benchmark::State& state) {
  auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto d = sstower::smith_normal_form(a);
    benchmark::DoNotOptimize(d.invariant_factors);
  }
}
BENCHMARK(bm_smith)->Arg(8)->Arg(16)->Arg(32);

void bm_smith_transforms(benchmark::State& state) {
  auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto d = sstower::smith_normal_form(a, true);
    benchmark::DoNotOptimize(d.u);
  }
}
BENCHMARK(bm_smith_transforms)->Arg(8)->Arg(16);

void bm_module(benchmark::State& state, sstower::FieldSpec spec, long a_p) {
  sstower::Tower t = sstower::build_tower(spec);
  for (auto _ : state) {
    auto inv = sstower::analyze_module(sstower::build_presentation(t, a_p),
                                       spec.p);
    benchmark::DoNotOptimize(inv.zp_rank);
  }
}
BENCHMARK_CAPTURE(bm_module, q3_zeta9, sstower::FieldSpec{.p = 3, .m = 1}, 0);
BENCHMARK_CAPTURE(bm_module, p5_f2_m1,
                  sstower::FieldSpec{.p = 5, .f = 2, .m = 1,
                                     .h_generators = {{0, 7}}},
                  0);

void bm_sha_exponent(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    auto e = sstower::sha_exponent(2, 5, n);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(bm_sha_exponent)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
