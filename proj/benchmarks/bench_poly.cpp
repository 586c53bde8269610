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

#include <random>

#include "modreg/polynomial.hpp"
#include "modreg/roots.hpp"

namespace {

modreg::Polynomial random_poly(int degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coeff(rng);
    if (c.back() == 0.0) c.back() = 1.0;
    return modreg::Polynomial{c};
}

void bm_poly_mul(benchmark::State& state) {
    const auto p = random_poly(static_cast<int>(state.range(0)), 1);
    const auto q = random_poly(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * q);
    }
}
BENCHMARK(bm_poly_mul)->Arg(4)->Arg(16)->Arg(64);

void bm_companion_roots(benchmark::State& state) {
    // Hurwitz test input: roots spread over the left half plane
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-50.0, -0.5);
    std::vector<std::complex<double>> rts;
    for (int i = 0; i < state.range(0); ++i) {
        rts.push_back({re(rng), 0.0});
    }
    const auto p = modreg::Polynomial::from_roots(rts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modreg::roots(p));
    }
}
BENCHMARK(bm_companion_roots)->Arg(3)->Arg(6)->Arg(12);

}  // namespace
