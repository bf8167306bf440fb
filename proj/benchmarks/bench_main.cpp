#include <random>

#include <benchmark/benchmark.h>

#include "picard/catalog.hpp"
#include "picard/cxhyp.hpp"
#include "picard/search.hpp"
#include "picard/todd_coxeter.hpp"

using namespace picard;

static void BM_QuadIntMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
  const QuadInt x(Ring::Eisenstein, dist(rng), dist(rng)), y(Ring::Eisenstein, dist(rng), dist(rng));
  for (auto _ : state) benchmark::DoNotOptimize(qi_mul(x, y));
}
BENCHMARK(BM_QuadIntMul);

static void BM_CanonicalRep(benchmark::State& state) {
  const Catalog& c = catalog(static_cast<int>(state.range(0)));
  const Mat3 m = c.eval("U1 U2^-1 U1^2 U2");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_rep(m));
}
BENCHMARK(BM_CanonicalRep)->Arg(1)->Arg(3)->Arg(7);

static void BM_ToddCoxeterQuotient(benchmark::State& state) {
  const Presentation p = hybrid_quotient(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p).index());
}
BENCHMARK(BM_ToddCoxeterQuotient)->Arg(1)->Arg(7);

static void BM_ToddCoxeterOverflow(benchmark::State& state) {
  const Presentation p = hybrid_quotient(3);
  EnumerationLimits lim;
  lim.max_cosets = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, {}, lim).complete());
}
BENCHMARK(BM_ToddCoxeterOverflow)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_SearchE1(benchmark::State& state) {
  const Catalog& c = catalog(3);
  std::vector<Named3> gens;
  const auto& pg = c.picard();
  for (std::size_t i = 0; i < pg.realization.size(); ++i)
    gens.push_back({pg.presentation.generator_names()[i], pg.realization[i]});
  SearchConfig cfg;
  cfg.direction = state.range(0) ? SearchDirection::Bidirectional : SearchDirection::Unidirectional;
  for (auto _ : state) benchmark::DoNotOptimize(find_word(c.matrix("E1"), gens, cfg).length());
}
BENCHMARK(BM_SearchE1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
