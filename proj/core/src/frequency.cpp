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

#include "modreg/frequency.hpp"

#include <cmath>
#include <stdexcept>

namespace modreg {

FrequencyGrid::FrequencyGrid(std::vector<double> points) : omegas(std::move(points)) {
    double prev = 0.0;
    for (double w : omegas) {
        if (!(w > prev)) {
            throw std::invalid_argument("FrequencyGrid: frequencies must be positive and strictly increasing");
        }
        prev = w;
    }
}

FrequencyGrid FrequencyGrid::log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw std::invalid_argument("FrequencyGrid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> pts(n);
    const double step = (std::log10(hi) - std::log10(lo)) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = std::pow(10.0, std::log10(lo) + step * static_cast<double>(i));
    }
    pts.back() = hi;  // guard the endpoint against rounding
    return FrequencyGrid{std::move(pts)};
}

FrequencyResponse freq_response(const RationalTF& g, const FrequencyGrid& grid) {
    FrequencyResponse out;
    out.grid = grid;
    out.values.reserve(grid.size());
    for (double w : grid.omegas) {
        out.values.push_back(g.eval({0.0, w}));
    }
    return out;
}

}  // namespace modreg
