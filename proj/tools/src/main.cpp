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

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

#include "modreg/cli/commands.hpp"
#include "modreg/cli/config.hpp"

namespace {

using modreg::cli::CliOptions;
using modreg::cli::Config;

struct SubcommandArgs {
    std::string config_path;
    CliOptions options;
};

void add_common_options(CLI::App* sub, SubcommandArgs& args) {
    sub->add_option("--config", args.config_path, "configuration file")
        ->envname("MODREG_CONFIG");
    sub->add_option("--out", args.options.out_dir, "output directory (overrides the config)");
    sub->add_option("--conditions", args.options.conditions_filter,
                    "comma list of v=<mps>, mu=<value>, or exact labels like v20_mu0.3");
}

int dispatch(const SubcommandArgs& args,
             const std::function<int(const Config&, const CliOptions&, std::ostream&)>& command) {
    try {
        if (args.config_path.empty()) {
            std::cerr << "error: no configuration given (use --config or MODREG_CONFIG)\n";
            return modreg::cli::kExitConfigError;
        }
        const Config config = modreg::cli::load_config_file(args.config_path);
        return command(config, args.options, std::cout);
    } catch (const modreg::cli::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return modreg::cli::kExitConfigError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return modreg::cli::kExitNumericalFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"model-regulator steering control toolbox"};
    app.require_subcommand(1);

    SubcommandArgs args;
    int exit_code = 0;

    auto* step_steer = app.add_subcommand("step-steer", "driver steering step campaign");
    add_common_options(step_steer, args);
    step_steer->callback([&] { exit_code = dispatch(args, modreg::cli::cmd_step_steer); });

    auto* step_moment = app.add_subcommand("step-moment", "yaw moment disturbance campaign");
    add_common_options(step_moment, args);
    step_moment->callback([&] { exit_code = dispatch(args, modreg::cli::cmd_step_moment); });

    auto* actuator = app.add_subcommand("actuator-compare",
                                        "limited-integrator vs standard actuator usage");
    add_common_options(actuator, args);
    actuator->callback([&] { exit_code = dispatch(args, modreg::cli::cmd_actuator_compare); });

    auto* bode = app.add_subcommand("bode", "filter magnitude against the uncertainty ceiling");
    add_common_options(bode, args);
    bode->callback([&] { exit_code = dispatch(args, modreg::cli::cmd_bode); });

    auto* check = app.add_subcommand("check", "configuration and stability report");
    add_common_options(check, args);
    check->callback([&] { exit_code = dispatch(args, modreg::cli::cmd_check); });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
