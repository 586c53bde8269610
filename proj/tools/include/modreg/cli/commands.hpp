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

#include <iosfwd>
#include <string>

#include "modreg/cli/config.hpp"

namespace modreg::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalFailure = 3;

struct CliOptions {
    std::string out_dir;            ///< overrides the config output directory
    std::string conditions_filter;  ///< comma list of v=<x>, mu=<y>, or labels
};

/// Label used in file names and tables, e.g. "v20_mu0.3".
std::string condition_label(const OperatingCondition& oc);

/// True when the condition passes the filter expression (empty matches all).
bool condition_matches(const OperatingCondition& oc, const std::string& filter);

int cmd_step_steer(const Config& config, const CliOptions& options, std::ostream& out);
int cmd_step_moment(const Config& config, const CliOptions& options, std::ostream& out);
int cmd_actuator_compare(const Config& config, const CliOptions& options, std::ostream& out);
int cmd_bode(const Config& config, const CliOptions& options, std::ostream& out);
int cmd_check(const Config& config, const CliOptions& options, std::ostream& out);

}  // namespace modreg::cli
