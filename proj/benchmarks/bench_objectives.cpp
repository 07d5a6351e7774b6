#include <benchmark/benchmark.h>

#include "rmga/objectives.hpp"

namespace {

void BM_Eval(benchmark::State& state, const char* name) {
  const auto& spec = rmga::find_objective(name);
  const rmga::Point p = spec.known_optimum->point;
  rmga::NoiseSource noise(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rmga::eval(spec, p, &noise));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Eval, f1, "f1");
BENCHMARK_CAPTURE(BM_Eval, f2, "f2");
BENCHMARK_CAPTURE(BM_Eval, f3, "f3");
BENCHMARK_CAPTURE(BM_Eval, f4, "f4");
BENCHMARK_CAPTURE(BM_Eval, f5, "f5");
BENCHMARK_CAPTURE(BM_Eval, beale, "beale");
BENCHMARK_CAPTURE(BM_Eval, quad, "quad");
