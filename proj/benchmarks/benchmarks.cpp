#include <benchmark/benchmark.h>

#include "revsc/complexity.hpp"
#include "revsc/dfao.hpp"
#include "revsc/monoid.hpp"
#include "revsc/search.hpp"

using namespace revsc;

namespace {

void BM_close_v5(benchmark::State& state) {
  const auto [alpha, beta] = v_n_generators(5);
  const Transformation a(alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(close({a, beta}).size());
  }
}
BENCHMARK(BM_close_v5);

void BM_close_full_t5(benchmark::State& state) {
  const auto gens = full_tm_generators(5).list();
  for (auto _ : state) {
    benchmark::DoNotOptimize(close(std::span<const Transformation>(gens)).size());
  }
}
BENCHMARK(BM_close_full_t5);

void BM_tau_orbit_u23(benchmark::State& state) {
  const auto [alpha, beta] = u_lm_generators(2, 3);
  const Transformation a(alpha);
  const auto tau = lemma_tau(4, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_orbit({a, beta}, tau).size());
  }
}
BENCHMARK(BM_tau_orbit_u23);

void BM_tau_orbit_u34(benchmark::State& state) {
  const auto [alpha, beta] = u_lm_generators(3, 4);
  const Transformation a(alpha);
  const auto tau = lemma_tau(4, 3, 4);  // orbit of 15472 maps
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_orbit({a, beta}, tau).size());
  }
}
BENCHMARK(BM_tau_orbit_u34);

void BM_reverse_full_t4(benchmark::State& state) {
  const Dfao d(full_tm_generators(4).list(), 1, OutputMap({1, 2, 3, 1}, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reverse(d).machine().state_count());
  }
}
BENCHMARK(BM_reverse_full_t4);

void BM_brute_force_3_4(benchmark::State& state) {
  SearchConfig config;
  config.n = 4;
  config.k = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(config).max_size);
  }
}
BENCHMARK(BM_brute_force_3_4)->Unit(benchmark::kMillisecond);

void BM_random_search_3_5(benchmark::State& state) {
  SearchConfig config;
  config.n = 5;
  config.k = 3;
  config.mode = SearchMode::random;
  config.iterations = 100;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_search(config).max_size);
  }
}
BENCHMARK(BM_random_search_3_5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
