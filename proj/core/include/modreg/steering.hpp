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

#include <span>
#include <string>
#include <vector>

#include "modreg/regulator.hpp"
#include "modreg/time_series.hpp"
#include "modreg/vehicle.hpp"

namespace modreg {

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Which signal the regulator's positive-feedback branch taps: the correction
/// actually applied to the wheels (post clamp) or the raw actuator command.
enum class FeedbackTap {
    post_saturation,
    pre_saturation,
};

/// The steering interconnection: driver angle plus a bounded corrective angle
/// from the model regulator, acting on the single-track vehicle.
struct SteeringLoop {
    VehicleParams params;
    OperatingCondition condition;
    DesiredModel desired;
    QFilter q;
    RationalTF actuator_gain = RationalTF::constant(1.0);
    double sat_limit_rad = deg_to_rad(3.0);
    FeedbackTap tap = FeedbackTap::post_saturation;

    /// Builds the loop with the desired model derived from the nominal
    /// steering dc gain at this speed.
    static SteeringLoop make(const VehicleParams& params, const OperatingCondition& condition,
                             QFilter q, double desired_tau_s);

    /// Throws unless sat_limit > 0 and the desired dc gain matches the
    /// nominal vehicle gain at this speed.
    void validate() const;
};

struct StepSignal {
    double amplitude = 0.0;
    double onset_s = 0.0;
};

struct Scenario {
    double duration_s = 5.0;
    double dt_s = 1e-4;
    StepSignal steer;   ///< driver steering step, rad
    StepSignal moment;  ///< yaw disturbance step, N*m
    bool saturation_enabled = true;

    void validate() const;
};

struct SimSummary {
    double peak_delta_mr_rad = 0.0;
    double steady_state_r = 0.0;
};

struct SimResult {
    TimeSeries r;               ///< yaw rate, rad/s
    TimeSeries delta_f;         ///< applied front steering angle, rad
    TimeSeries delta_mr;        ///< applied correction (clamped when enabled)
    TimeSeries delta_mr_unsat;  ///< actuator command before the clamp
    std::vector<std::uint8_t> saturated;  ///< |command| > limit per sample
    SimSummary summary;
};

/// Closed-loop transfer functions of the linear (clamp-free) interconnection;
/// all four share one characteristic denominator.
struct ChannelTFs {
    RationalTF r_from_steer;
    RationalTF r_from_moment;
    RationalTF dmr_from_steer;
    RationalTF dmr_from_moment;
};

ChannelTFs build_channel_tfs(const SteeringLoop& loop);

/// Time-domain simulation of the steering diagram. The linear blocks are
/// interconnected exactly in continuous time and discretized by a single
/// exact ZOH; the clamp excess enters as one per-sample-held input channel,
/// so the unclamped trajectory is bit-identical to the linear closed loop.
/// Throws std::invalid_argument when Q/G_n is improper (causality).
SimResult simulate_block(const SteeringLoop& loop, const Scenario& sc);

/// Same scenario with the correction path removed (delta_mr identically 0).
SimResult simulate_conventional(const SteeringLoop& loop, const Scenario& sc);

/// Driver step giving unit steady-state yaw rate on dry road: 1/K_n(v), rad.
double normalized_steer_step(const SteeringLoop& loop);

/// Peak |delta_mr(t)| of the clamp-free correction response to a unit moment
/// step, over the scenario horizon. Throws if the loop is unstable.
double peak_actuator_per_unit_moment(const SteeringLoop& loop, const Scenario& sc);

/// Smallest moment-step amplitude that drives the clamp-free correction to
/// the saturation limit: sat_limit / peak-per-unit-moment.
double min_saturating_moment(const SteeringLoop& loop, const Scenario& sc);

struct CampaignRow {
    OperatingCondition condition;
    bool ok = false;
    std::string error;
    SimResult controlled;
    SimResult conventional;
    double tracking_deviation = 0.0;  ///< max |r - desired-model response|, steer runs
    bool characteristic_hurwitz = false;
    double wall_clock_s = 0.0;
};

/// Runs controlled and conventional simulations per loop; individual loop
/// failures are recorded in their row and do not stop the campaign.
/// `scenarios` holds either one shared scenario or one per loop.
std::vector<CampaignRow> run_campaign(std::span<const SteeringLoop> loops,
                                      std::span<const Scenario> scenarios);
std::vector<CampaignRow> run_campaign(std::span<const SteeringLoop> loops, const Scenario& sc);

}  // namespace modreg
