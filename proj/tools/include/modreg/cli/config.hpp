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

#include <string>
#include <vector>

#include "modreg/regulator.hpp"
#include "modreg/steering.hpp"
#include "modreg/vehicle.hpp"

namespace modreg::cli {

/// Configuration parse failure with a line-anchored diagnostic.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(int line, const std::string& message)
        : std::runtime_error("config line " + std::to_string(line) + ": " + message),
          line_(line) {}
    explicit ConfigError(const std::string& message)
        : std::runtime_error("config: " + message), line_(0) {}

    int line() const { return line_; }

  private:
    int line_;
};

struct QConfig {
    enum class Kind { first_order, limited_integrator, general };
    Kind kind = Kind::limited_integrator;
    double gain = 10.0;     // limited_integrator
    double tau_s = 0.006;   // limited_integrator
    double tau_q_s = 0.0;   // first_order
    std::vector<double> num;  // general, ascending coefficients
    std::vector<double> den;

    bool operator==(const QConfig&) const = default;
};

struct ScenarioConfig {
    double dt_s = 1e-4;
    double duration_s = 5.0;
    bool steer_normalized = true;  ///< steer_step_rad = normalized
    double steer_step_rad = 0.0;
    double steer_onset_s = 0.0;
    double moment_step_nm = 4000.0;
    double moment_onset_s = 0.0;
    bool saturation = false;
    double sat_limit_deg = 3.0;
    bool pre_saturation_tap = false;
    double tracking_envelope = 0.1;

    bool operator==(const ScenarioConfig&) const = default;
};

struct BodeConfig {
    double omega_min_radps = 1e-2;
    double omega_max_radps = 1e5;
    int points = 400;
    int mu_samples = 8;

    bool operator==(const BodeConfig&) const = default;
};

struct OutputConfig {
    std::string directory = "out";
    bool csv = true;
    bool plot = false;
    double reference_saturation_moment_nm = 6119.0;

    bool operator==(const OutputConfig&) const = default;
};

struct Config {
    VehicleParams vehicle = VehicleParams::mid_size_sedan();
    std::vector<double> v_mps = {10.0, 20.0, 30.0};
    std::vector<double> mu = {0.3, 1.0};
    QConfig q;
    double desired_tau_s = 0.15;
    ScenarioConfig scenario;
    BodeConfig bode;
    OutputConfig output;

    /// Cross product of the speed and friction lists, speeds outermost.
    std::vector<OperatingCondition> conditions() const;

    bool operator==(const Config&) const = default;
};

/// Parses the sectioned key-value format. Unknown sections or keys, duplicate
/// keys, and malformed values fail with a line-anchored ConfigError.
Config parse_config(const std::string& text);

/// Reads and parses a file; file-system problems raise ConfigError.
Config load_config_file(const std::string& path);

/// Canonical text form; parse_config(render_config(c)) reproduces c.
std::string render_config(const Config& config);

/// Q filter from the configured block (construction errors propagate).
QFilter build_q(const QConfig& q);

/// Steering loop for one operating condition under this configuration.
SteeringLoop build_loop(const Config& config, const OperatingCondition& oc);

/// Scenario skeleton: timing, saturation, onsets; step amplitudes start at 0.
Scenario base_scenario(const ScenarioConfig& sc);

}  // namespace modreg::cli
