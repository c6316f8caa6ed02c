#include <benchmark/benchmark.h>

#include <random>

#include "bchcov/construct.hpp"
#include "bchcov/cover.hpp"

using namespace bchcov;

static void BM_FieldMul(benchmark::State& state) {
  const FieldSpec f = FieldSpec::make(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<Felt> xs(1024);
  for (auto& x : xs) x = f.element(rng() % f.size());
  std::size_t i = 0;
  Felt acc = f.one();
  for (auto _ : state) {
    acc = f.mul(acc, xs[i++ & 1023]) + f.one();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(31);

static void BM_MinCover(benchmark::State& state) {
  const FieldSpec f = FieldSpec::make(5);
  const CoverEngine engine(build_columns(f));
  std::mt19937_64 rng(2);
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::vector<std::uint64_t> targets(r);
    for (auto& t : targets) t = rng() & 0x3ff;
    benchmark::DoNotOptimize(engine.min_cover(targets));
  }
}
BENCHMARK(BM_MinCover)->Arg(1)->Arg(2)->Arg(3);

static void BM_GcrExact(benchmark::State& state) {
  const CoverEngine engine(build_columns(FieldSpec::make(4)));
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gcr_exact(engine, r).rho);
}
BENCHMARK(BM_GcrExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Cover2kPlus1(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const FieldSpec f = FieldSpec::make(static_cast<int>(state.range(1)));
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    std::vector<SyndromePair> targets;
    for (int i = 0; i < k; ++i) targets.push_back({f.element(rng() % f.size()), f.element(rng() % f.size())});
    benchmark::DoNotOptimize(cover_2kplus1(f, targets));
  }
}
BENCHMARK(BM_Cover2kPlus1)->Args({2, 7})->Args({3, 11})->Args({4, 14});

BENCHMARK_MAIN();
