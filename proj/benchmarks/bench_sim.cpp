// Copyright 2026 the modreg authors
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

#include <benchmark/benchmark.h>

#include "modreg/state_space.hpp"
#include "modreg/steering.hpp"

namespace {

using modreg::QFilter;
using modreg::Scenario;
using modreg::SteeringLoop;
using modreg::VehicleParams;

SteeringLoop bench_loop() {
    return SteeringLoop::make(VehicleParams::mid_size_sedan(), {20.0, 0.3},
                              QFilter::limited_integrator(10.0, 0.006), 0.15);
}

Scenario bench_scenario(double duration) {
    Scenario sc;
    sc.duration_s = duration;
    sc.dt_s = 1e-4;
    sc.moment = {4000.0, 0.0};
    sc.saturation_enabled = true;
    return sc;
}

void bm_discretize_zoh(benchmark::State& state) {
    const auto ss = modreg::to_state_space(
        modreg::steering_tf(VehicleParams::mid_size_sedan(), {20.0, 1.0}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(modreg::discretize_zoh(ss, 1e-4));
    }
}
BENCHMARK(bm_discretize_zoh);

void bm_simulate_block(benchmark::State& state) {
    const SteeringLoop loop = bench_loop();
    const Scenario sc = bench_scenario(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(modreg::simulate_block(loop, sc));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(sc.duration_s / sc.dt_s));
}
BENCHMARK(bm_simulate_block)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_channel_construction(benchmark::State& state) {
    const SteeringLoop loop = bench_loop();
    for (auto _ : state) {
        benchmark::DoNotOptimize(modreg::build_channel_tfs(loop));
    }
}
BENCHMARK(bm_channel_construction);

}  // namespace
