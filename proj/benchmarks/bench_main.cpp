#include <benchmark/benchmark.h>

#include "agcheck/cayley.hpp"
#include "agcheck/enumerate.hpp"
#include "agcheck/fixtures.hpp"
#include "agcheck/fuzzy.hpp"
#include "agcheck/ideals.hpp"
#include "agcheck/verify.hpp"

using namespace agcheck;

static void BM_LawsExample3(benchmark::State& state) {
  Groupoid const g = fixtures::example3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_identity_laws(g));
  }
}
BENCHMARK(BM_LawsExample3);

static void BM_IntraRegular(benchmark::State& state) {
  Groupoid const g = from_abelian_group(fixtures::cyclic_group(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_intra_regular(g));
  }
}
BENCHMARK(BM_IntraRegular)->Arg(4)->Arg(16)->Arg(64);

static void BM_EnumerateIdeals(benchmark::State& state) {
  Groupoid const g    = fixtures::example3();
  auto const     kind = static_cast<IdealKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_ideals(g, kind));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_EnumerateIdeals)
    ->Arg(static_cast<int>(IdealKind::left))
    ->Arg(static_cast<int>(IdealKind::bi))
    ->Arg(static_cast<int>(IdealKind::quasi));

static void BM_FuzzyIdealCheck(benchmark::State& state) {
  Groupoid const g = fixtures::example3();
  auto const     f = fixtures::example3_fuzzy_ideal();
  auto const     k = KParam::parse("2/5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_fuzzy_ideal(g, f, k, IdealKind::bi));
  }
}
BENCHMARK(BM_FuzzyIdealCheck);

static void BM_Compose(benchmark::State& state) {
  Groupoid const g = fixtures::example3();
  auto const     f = fixtures::example3_fuzzy_ideal();
  auto const     k = KParam::parse("1/2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_k(g, f, f, k));
  }
}
BENCHMARK(BM_Compose);

static void BM_CountAg(benchmark::State& state) {
  SearchConstraints const c{static_cast<std::size_t>(state.range(0)), false, false, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_ag(c));
  }
}
BENCHMARK(BM_CountAg)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CheckStatement(benchmark::State& state) {
  Groupoid const g = from_abelian_group(fixtures::cyclic_group(5));
  FuzzyConfig    cfg;
  cfg.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_statement(g, "T3.10", cfg));
  }
}
BENCHMARK(BM_CheckStatement)->Arg(0)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
