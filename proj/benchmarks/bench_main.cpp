// Copyright 2026 The cvpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include <benchmark/benchmark.h>

#include "cvpulse/circuit.hpp"
#include "cvpulse/crmodel.hpp"
#include "cvpulse/gates.hpp"
#include "cvpulse/pulse.hpp"
#include "cvpulse/synth.hpp"
#include "cvpulse/weyl.hpp"

namespace {

using cvpulse::GateName;

const double kDt = 2.0 / 9.0;

cvpulse::DeviceTimingConfig example_timing() {
  cvpulse::DeviceTimingConfig cfg;
  cfg.single_qubit_pulse_ns = 160 * kDt;
  cfg.cr_edge_ns = 128 * kDt;
  cfg.dt_granularity_ns = kDt;
  cfg.per_edge_cr_flat_top_ns[{1, 4}] = 624 * kDt;
  cfg.per_edge_cr_flat_top_ns[{0, 1}] = 169 * kDt;
  cfg.control_channel_index[{1, 4}] = 3;
  return cfg;
}

void BM_FidelitySweep500(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i < 500; ++i) grid.push_back(196.0 * i / 499.0);
  for (auto _ : state) {
    auto pts = cvpulse::fidelity_sweep(cvpulse::TrialKind::CV, 98.0, grid,
                                       static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_FidelitySweep500)->Arg(1)->Arg(4);

void BM_CanonicalCoordinates(benchmark::State& state) {
  const cvpulse::Unitary u = cvpulse::named_gate(GateName::SQiSWAP);
  for (auto _ : state) {
    auto p = cvpulse::canonical_coordinates(u);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_CanonicalCoordinates);

void BM_SynthesizeSqrtIswap(benchmark::State& state) {
  cvpulse::SynthesisProblem p;
  p.target = cvpulse::named_gate(GateName::SQiSWAP).mat();
  p.basis = cvpulse::named_gate(GateName::CV).mat();
  p.k = 2;
  p.restarts = 4;
  p.tol = 1e-6;
  p.max_sweeps = 2000;
  for (auto _ : state) {
    auto r = cvpulse::synthesize(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SynthesizeSqrtIswap);

void BM_EvalToffoliCircuit(benchmark::State& state) {
  const cvpulse::Circuit c = cvpulse::build_named(cvpulse::NamedCircuit::TOF_CV);
  for (auto _ : state) {
    auto u = cvpulse::eval_unitary(c);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_EvalToffoliCircuit);

void BM_BuildSchedule(benchmark::State& state) {
  const auto cfg = example_timing();
  for (auto _ : state) {
    auto s = cvpulse::build_two_qubit_schedule(cvpulse::ScheduleKind::CV, cfg,
                                               {1, 4});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BuildSchedule);

}  // namespace

BENCHMARK_MAIN();
