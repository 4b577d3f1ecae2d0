#include <benchmark/benchmark.h>

#include "toprec/alg/matrix.hpp"
#include "toprec/alg/parser.hpp"
#include "toprec/kp/free_energy.hpp"
#include "toprec/kp/lax.hpp"
#include "toprec/loopeq/checks.hpp"
#include "toprec/tr/correlator_table.hpp"

using namespace toprec;

namespace {

// Fresh table each iteration so nothing is memoized across runs.
void omega(benchmark::State& state, int p, int q) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto c = kp::build_model_curve(kp::make_model(p, q));
  tr::TruncationPolicy pol;
  pol.threads = 1;
  for (auto _ : state) {
    tr::CorrelatorTable t(c, pol);
    benchmark::DoNotOptimize(t.omega(g, n).terms().size());
  }
}

void BM_OmegaGravity(benchmark::State& s) { omega(s, 3, 2); }
void BM_OmegaIsing(benchmark::State& s) { omega(s, 4, 3); }
BENCHMARK(BM_OmegaGravity)->Args({0, 4})->Args({1, 2})->Args({2, 1})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OmegaIsing)->Args({1, 1})->Args({2, 1})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_StringSeries(benchmark::State& state) {
  auto m = kp::make_model(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kp::string_series(m, static_cast<int>(state.range(0))).orders.size());
}
BENCHMARK(BM_StringSeries)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyLax(benchmark::State& state) {
  auto m = kp::make_model(4, 3);
  auto lp = kp::build_lax(m);
  auto ss = kp::string_series(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kp::verify_lax(lp, ss, static_cast<int>(state.range(0))).entries);
}
BENCHMARK(BM_VerifyLax)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LoopeqSuite(benchmark::State& state) {
  auto sys = loopeq::random_system(static_cast<int>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(loopeq::run_suite(sys).pass());
}
BENCHMARK(BM_LoopeqSuite)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Berkowitz(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  alg::Matrix<alg::Rat> a(n, std::vector<alg::Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = alg::Rat(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + (i + j) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(alg::determinant(a));
}
BENCHMARK(BM_Berkowitz)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
