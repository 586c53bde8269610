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

#include "modreg/rational_tf.hpp"

namespace modreg {

/// Single-track (bicycle) model parameters, strict SI. Cornering stiffnesses
/// are the dry-road values; the operating friction coefficient scales them.
struct VehicleParams {
    double lf_m = 0.0;         ///< CG to front axle
    double lr_m = 0.0;         ///< CG to rear axle
    double mass_kg = 0.0;
    double inertia_kgm2 = 0.0; ///< yaw inertia
    double cf0_nprad = 0.0;    ///< nominal front cornering stiffness
    double cr0_nprad = 0.0;    ///< nominal rear cornering stiffness
    double mu_nominal = 1.0;   ///< nominal road friction (dry)

    /// Mid-sized passenger car data set used throughout the default configs.
    static VehicleParams mid_size_sedan() {
        return {1.25, 1.32, 1296.0, 1750.0, 84000.0, 96000.0, 1.0};
    }

    /// Throws std::invalid_argument unless every field is strictly positive.
    void validate() const;

    bool operator==(const VehicleParams&) const = default;
};

/// Constant-speed operating point; friction scales both cornering stiffnesses.
struct OperatingCondition {
    double v_mps = 0.0;
    double mu = 1.0;

    void validate() const;

    bool operator==(const OperatingCondition&) const = default;
};

/// Yaw-rate response to front steering angle: (b1 s + b0)/(a2 s^2 + a1 s + a0)
/// with friction-scaled stiffnesses.
RationalTF steering_tf(const VehicleParams& p, const OperatingCondition& oc);

/// Yaw-rate response to an external yaw moment; shares the steering
/// denominator coefficient-for-coefficient at the same condition.
RationalTF disturbance_tf(const VehicleParams& p, const OperatingCondition& oc);

/// Steady-state yaw-rate gain per steering angle at nominal friction (1/s).
/// Throws std::domain_error at a critical-speed degeneracy (a0 = 0).
double nominal_dc_gain(const VehicleParams& p, double v_mps);

}  // namespace modreg
