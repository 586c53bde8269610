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

#pragma once

#include <complex>
#include <vector>

#include "modreg/rational_tf.hpp"

namespace modreg {

/// Strictly increasing positive frequencies in rad/s.
struct FrequencyGrid {
    std::vector<double> omegas;

    FrequencyGrid() = default;
    explicit FrequencyGrid(std::vector<double> points);

    /// n log-spaced points over [lo, hi], endpoints included.
    static FrequencyGrid log_spaced(double lo, double hi, std::size_t n);

    std::size_t size() const { return omegas.size(); }
};

/// Complex response values aligned with a grid. Points that fall on an
/// imaginary-axis pole come out non-finite; callers treat non-finite values
/// as per-point error markers.
struct FrequencyResponse {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;
};

/// num(j*omega)/den(j*omega) per grid point.
FrequencyResponse freq_response(const RationalTF& g, const FrequencyGrid& grid);

}  // namespace modreg
