// Reference kernels against the Exec::serial and Exec::parallel paths.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "rsol/metric_lie.hpp"
#include "rsol/reference.hpp"
#include "rsol/spaces.hpp"

using namespace rsol;

namespace {

const std::vector<std::string> kSpaces = {"N(4,1)", "AN(3,1,0)", "SL(4)"};

const MetricLieAlgebra& algebra(std::size_t i) {
  static const std::vector<Space> spaces = [] {
    std::vector<Space> s;
    for (const auto& spec : kSpaces) s.push_back(parse_space(spec));
    return s;
  }();
  return spaces.at(i).algebra();
}

enum Route { kReference, kSerial, kParallel };

void label(benchmark::State& state) {
  static const char* routes[] = {"reference", "serial", "parallel"};
  state.SetLabel(kSpaces.at(state.range(0)) + " " + routes[state.range(1)]);
}

void BM_LeviCivita(benchmark::State& state) {
  const auto& l = algebra(state.range(0));
  for (auto _ : state) {
    switch (state.range(1)) {
      case kReference: benchmark::DoNotOptimize(reference::levi_civita(l)); break;
      case kSerial: benchmark::DoNotOptimize(levi_civita(l, Exec::serial)); break;
      default: benchmark::DoNotOptimize(levi_civita(l, Exec::parallel));
    }
  }
  label(state);
}

void BM_Ricci(benchmark::State& state) {
  const auto& l = algebra(state.range(0));
  for (auto _ : state) {
    switch (state.range(1)) {
      case kReference: benchmark::DoNotOptimize(reference::ricci(l)); break;
      case kSerial: benchmark::DoNotOptimize(ricci(l, Exec::serial)); break;
      default: benchmark::DoNotOptimize(ricci(l, Exec::parallel));
    }
  }
  label(state);
}

void BM_LeibnizDefects(benchmark::State& state) {
  const auto& l = algebra(state.range(0));
  const Matrix d = ricci(l);
  for (auto _ : state) {
    switch (state.range(1)) {
      case kReference: benchmark::DoNotOptimize(reference::leibniz_defects(l, d)); break;
      case kSerial: benchmark::DoNotOptimize(leibniz_defects(l, d, Exec::serial)); break;
      default: benchmark::DoNotOptimize(leibniz_defects(l, d, Exec::parallel));
    }
  }
  label(state);
}

void routes(benchmark::internal::Benchmark* b) {
  for (int s = 0; s < 3; ++s)
    for (int r : {kReference, kSerial, kParallel}) b->Args({s, r});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_LeviCivita)->Apply(routes);
BENCHMARK(BM_Ricci)->Apply(routes);
BENCHMARK(BM_LeibnizDefects)->Apply(routes);

BENCHMARK_MAIN();
