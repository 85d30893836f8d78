#include <benchmark/benchmark.h>

#include "intval/analytic.hpp"
#include "intval/classify.hpp"
#include "intval/concordance.hpp"
#include "intval/diffcalc.hpp"

using namespace intval;

namespace {

Sequence expoly_fixture(std::int64_t length) {
  const ExpPolyForm form{RationalPoly({1, 3}), RationalPoly({0, 0, 1})};
  return synthesize(form, 0, static_cast<std::size_t>(length));
}

void BM_BinomialRow(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t k = 0; k <= n; ++k) benchmark::DoNotOptimize(binomial(n, k));
  }
}
BENCHMARK(BM_BinomialRow)->Arg(64)->Arg(256)->Arg(1024);

void BM_VanishingScan(benchmark::State& state) {
  const auto s = expoly_fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_scan(s, 2, 1));
}
BENCHMARK(BM_VanishingScan)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_ExpolyFit(benchmark::State& state) {
  const auto B = state.range(0);
  const auto s = expoly_fixture(3 * B + 4);
  for (auto _ : state) benchmark::DoNotOptimize(expoly_fit(s, B, 2));
}
BENCHMARK(BM_ExpolyFit)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto s = expoly_fixture(state.range(0));
  ClassifyOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(classify(s, o));
}
BENCHMARK(BM_Classify)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_ConcordanceScan(benchmark::State& state) {
  std::vector<Rational> v;
  for (std::int64_t a = 0; a <= state.range(0); ++a) v.emplace_back(a * a * a - 7 * a);
  const Sequence s(0, v);
  ConcordanceOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(concordance_scan(s, 3, 0, state.range(0), o));
}
BENCHMARK(BM_ConcordanceScan)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CmainGrid(benchmark::State& state) {
  const auto p_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t p = 2; p <= p_max; ++p) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (!prime) continue;
      for (std::uint64_t k = 1; k <= 5; ++k) {
        for (std::uint64_t l = 0; l <= 8; ++l) benchmark::DoNotOptimize(cmain_first(p, k, l));
      }
    }
  }
}
BENCHMARK(BM_CmainGrid)->Arg(13)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_QuadI(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(quad_I(n, n / 4, 2));
}
BENCHMARK(BM_QuadI)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
