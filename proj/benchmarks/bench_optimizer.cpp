#include <benchmark/benchmark.h>

#include "rmga/harness.hpp"
#include "rmga/optimizer.hpp"

namespace {

void BM_Run(benchmark::State& state, const char* name) {
  const auto& spec = rmga::find_objective(name);
  rmga::RmConfig config;
  std::uint64_t trm = 0;
  for (auto _ : state) {
    const auto r = rmga::rm_optimize(spec, config, false);
    trm = r.trm;
    benchmark::DoNotOptimize(r.best_value);
  }
  state.counters["trm"] = static_cast<double>(trm);
}

void BM_Replicates(benchmark::State& state) {
  const auto& spec = rmga::find_objective("f4");
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmga::run_replicates(spec, rmga::RmConfig{}, 16, 0, threads));
  }
}

void BM_GridOracle(benchmark::State& state) {
  const auto& spec = rmga::find_objective("quad");
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmga::grid_oracle(spec, 0.05));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Run, f1, "f1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, f2, "f2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, f3, "f3")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, f4, "f4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, f5, "f5")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, beale, "beale")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, quad, "quad")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Replicates)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOracle)->Unit(benchmark::kMillisecond);
