#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdlib>

#include "scott/approx_game.hpp"
#include "scott/bf_table.hpp"
#include "scott/ef_game.hpp"
#include "scott/json_io.hpp"
#include "scott/ksystem.hpp"
#include "scott/net_family.hpp"

using namespace scott;

namespace {

MetricSpace integer_line(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (int j = 0; j < n; ++j) dist[i][j] = Rational(std::abs(i - j));
  }
  return MetricSpace(std::move(labels), std::move(dist));
}

MetricSpace cycle(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      int d = std::abs(i - j);
      dist[i][j] = Rational(std::min(d, n - d));
    }
  }
  return MetricSpace(std::move(labels), std::move(dist));
}

void BM_TableCompute(benchmark::State& state) {
  auto s = integer_line(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BackAndForthTable::compute(s));
  }
}
BENCHMARK(BM_TableCompute)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_TableComputeCycle(benchmark::State& state) {
  auto s = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BackAndForthTable::compute(s));
  }
}
BENCHMARK(BM_TableComputeCycle)->Arg(5)->Arg(6)->Arg(7);

void BM_EfSolve(benchmark::State& state) {
  auto s = integer_line(5);
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_ef_game(s, {0}, {4}, RankValue::finite(budget)));
  }
}
BENCHMARK(BM_EfSolve)->Arg(1)->Arg(2)->Arg(3);

void BM_EfSolveOmega(benchmark::State& state) {
  auto s = cycle(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ef_game(s, {0}, {3}, RankValue::omega()));
  }
}
BENCHMARK(BM_EfSolveOmega);

void BM_ApproxSolve(benchmark::State& state) {
  auto s = integer_line(4);
  ToleranceSchedule f(Rational(1, 4), Rational(1, 2));
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_approx_game(s, {0}, {3}, RankValue::finite(budget), f));
  }
}
BENCHMARK(BM_ApproxSolve)->Arg(2)->Arg(4);

void BM_KSystemSearch(benchmark::State& state) {
  auto s = cycle(static_cast<int>(state.range(0)));
  auto nets = build_net_family(s, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_k_system(s, {0}, {1}, nets, 3));
  }
}
BENCHMARK(BM_KSystemSearch)->Arg(4)->Arg(5)->Arg(6);

void BM_StreamIsometry(benchmark::State& state) {
  auto s = cycle(6);
  for (auto _ : state) {
    auto st = lazy_p2_strategy(s, {0}, {1});
    benchmark::DoNotOptimize(strategy_stream_isometry(s, {0}, {1}, st));
  }
}
BENCHMARK(BM_StreamIsometry);

}  // namespace

BENCHMARK_MAIN();
