// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#include <prda/design.hpp>
#include <prda/distributions.hpp>
#include <prda/effect_model.hpp>
#include <prda/oracle.hpp>
#include <prda/prospective.hpp>
#include <prda/random.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_Normals(benchmark::State& state) {
  prda::Generator g({1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(g.normal());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Normals);

void BM_Retrospective(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prda::retrospective(0.35, n, n, 0.05, 10000, 1, {1}));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Retrospective)->Arg(20)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Prospective(benchmark::State& state) {
  prda::ProspectiveSpec spec;
  spec.d = 0.5;
  spec.target_power = 0.8;
  spec.B = 10000;
  for (auto _ : state) benchmark::DoNotOptimize(prda::find_sample_size(spec, 1, {1}));
}
BENCHMARK(BM_Prospective)->Unit(benchmark::kMillisecond);

void BM_DesignEst(benchmark::State& state) {
  prda::DesignEstSpec spec;
  spec.n1 = spec.n2 = 31;
  spec.prior = prda::EffectPrior::truncated_normal(0.2, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(prda::design_est(spec, 1, {1}));
}
BENCHMARK(BM_DesignEst)->Unit(benchmark::kMillisecond);

void BM_ExactDesign(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prda::exact_design(0.35, n, n, 0.05));
}
BENCHMARK(BM_ExactDesign)->Arg(10)->Arg(48)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_TQuantile(benchmark::State& state) {
  double df = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prda::central_t_quantile(0.975, df));
    df = df > 500 ? 2.0 : df + 1.0;
  }
}
BENCHMARK(BM_TQuantile);

}  // namespace

BENCHMARK_MAIN();
