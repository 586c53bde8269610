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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modreg {

/// Uniformly sampled signal; frame-major storage for multi-channel data
/// (sample k, channel c at data[k*channels + c]).
struct TimeSeries {
    double dt = 0.0;
    std::size_t channels = 1;
    std::vector<double> data;

    TimeSeries() = default;

    TimeSeries(double dt_s, std::size_t channel_count, std::vector<double> samples)
        : dt(dt_s), channels(channel_count), data(std::move(samples)) {
        if (dt <= 0.0) {
            throw std::invalid_argument("TimeSeries: dt must be positive");
        }
        if (channels == 0 || data.size() % channels != 0) {
            throw std::invalid_argument("TimeSeries: sample count is not a multiple of the channel count");
        }
    }

    /// Single-channel series.
    TimeSeries(double dt_s, std::vector<double> samples)
        : TimeSeries(dt_s, 1, std::move(samples)) {}

    static TimeSeries zeros(double dt_s, std::size_t channel_count, std::size_t sample_count) {
        return {dt_s, channel_count, std::vector<double>(channel_count * sample_count, 0.0)};
    }

    std::size_t samples() const { return channels == 0 ? 0 : data.size() / channels; }

    double operator()(std::size_t sample, std::size_t channel = 0) const {
        return data[sample * channels + channel];
    }
    double& operator()(std::size_t sample, std::size_t channel = 0) {
        return data[sample * channels + channel];
    }
};

/// Mean of the final 5% of samples (at least one sample).
inline double steady_state(const TimeSeries& ts, std::size_t channel = 0) {
    const std::size_t n = ts.samples();
    if (n == 0) {
        throw std::invalid_argument("steady_state: empty series");
    }
    const std::size_t start = (n * 19) / 20;
    double sum = 0.0;
    for (std::size_t k = start; k < n; ++k) {
        sum += ts(k, channel);
    }
    return sum / static_cast<double>(n - start);
}

/// Largest |value| over all samples of one channel.
inline double peak_abs(const TimeSeries& ts, std::size_t channel = 0) {
    double peak = 0.0;
    for (std::size_t k = 0; k < ts.samples(); ++k) {
        peak = std::max(peak, std::abs(ts(k, channel)));
    }
    return peak;
}

}  // namespace modreg
