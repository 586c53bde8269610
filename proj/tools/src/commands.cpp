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

#include "modreg/cli/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "modreg/roots.hpp"
#include "modreg/state_space.hpp"

#ifndef MODREG_VERSION
#define MODREG_VERSION "0.0.0"
#endif

namespace modreg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9e", v);
    return buf;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct ConditionRun {
    OperatingCondition oc;
    std::string label;
    SteeringLoop loop;
};

std::vector<ConditionRun> build_runs(const Config& config, const CliOptions& options) {
    std::vector<ConditionRun> runs;
    for (const auto& oc : config.conditions()) {
        if (!condition_matches(oc, options.conditions_filter)) {
            continue;
        }
        runs.push_back({oc, condition_label(oc), build_loop(config, oc)});
    }
    if (runs.empty()) {
        throw ConfigError("no conditions left after applying the filter");
    }
    return runs;
}

fs::path output_dir(const Config& config, const CliOptions& options, const std::string& sub) {
    const fs::path base = options.out_dir.empty() ? fs::path(config.output.directory)
                                                  : fs::path(options.out_dir);
    return base / sub;
}

void write_sim_csv(const fs::path& path, const SimResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << "t,r,delta_f,delta_mr,delta_mr_unsat,saturated\n";
    for (std::size_t k = 0; k < result.r.samples(); ++k) {
        const double t = static_cast<double>(k) * result.r.dt;
        out << sci(t) << ',' << sci(result.r(k)) << ',' << sci(result.delta_f(k)) << ','
            << sci(result.delta_mr(k)) << ',' << sci(result.delta_mr_unsat(k)) << ','
            << static_cast<int>(result.saturated[k]) << '\n';
    }
}

void write_reference_csv(const fs::path& path, const TimeSeries& reference) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << "t,r\n";
    for (std::size_t k = 0; k < reference.samples(); ++k) {
        out << sci(static_cast<double>(k) * reference.dt) << ',' << sci(reference(k)) << '\n';
    }
}

void write_columns_dat(const fs::path& path, const std::string& header,
                       const std::vector<const TimeSeries*>& columns) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << "# " << header << "\n";
    const std::size_t n = columns.front()->samples();
    for (std::size_t k = 0; k < n; ++k) {
        out << sci(static_cast<double>(k) * columns.front()->dt);
        for (const TimeSeries* ts : columns) {
            out << ' ' << sci((*ts)(k));
        }
        out << '\n';
    }
}

json manifest_skeleton(const Config& config, const std::string& command) {
    json m;
    m["tool"] = "modreg";
    m["version"] = MODREG_VERSION;
    m["command"] = command;
    m["config_echo"] = render_config(config);
    m["rows"] = json::array();
    return m;
}

void write_manifest(const fs::path& dir, json manifest, double wall_clock_s) {
    manifest["wall_clock_s"] = wall_clock_s;
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write manifest in '" + dir.string() + "'");
    }
    out << manifest.dump(2) << '\n';
}

bool any_saturated(const SimResult& result) {
    return std::any_of(result.saturated.begin(), result.saturated.end(),
                       [](std::uint8_t f) { return f != 0; });
}

}  // namespace

std::string condition_label(const OperatingCondition& oc) {
    return "v" + format_number(oc.v_mps) + "_mu" + format_number(oc.mu);
}

bool condition_matches(const OperatingCondition& oc, const std::string& filter) {
    if (filter.empty()) {
        return true;
    }
    std::vector<double> vs, mus;
    std::vector<std::string> labels;
    std::istringstream in(filter);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.rfind("v=", 0) == 0) {
            vs.push_back(std::stod(token.substr(2)));
        } else if (token.rfind("mu=", 0) == 0) {
            mus.push_back(std::stod(token.substr(3)));
        } else if (!token.empty()) {
            labels.push_back(token);
        }
    }
    auto contains = [](const std::vector<double>& set, double v) {
        return std::any_of(set.begin(), set.end(), [v](double x) { return x == v; });
    };
    if (!vs.empty() && !contains(vs, oc.v_mps)) return false;
    if (!mus.empty() && !contains(mus, oc.mu)) return false;
    if (!labels.empty() &&
        std::find(labels.begin(), labels.end(), condition_label(oc)) == labels.end()) {
        return false;
    }
    return true;
}

int cmd_step_steer(const Config& config, const CliOptions& options, std::ostream& out) {
    const Timer timer;
    const auto runs = build_runs(config, options);

    std::vector<SteeringLoop> loops;
    std::vector<Scenario> scenarios;
    for (const auto& run : runs) {
        Scenario sc = base_scenario(config.scenario);
        sc.steer.amplitude = config.scenario.steer_normalized ? normalized_steer_step(run.loop)
                                                              : config.scenario.steer_step_rad;
        loops.push_back(run.loop);
        scenarios.push_back(sc);
    }

    const fs::path dir = output_dir(config, options, "step_steer");
    fs::create_directories(dir);
    json manifest = manifest_skeleton(config, "step-steer");
    bool all_ok = true;

    out << "step-steer: normalized driver step, controlled vs conventional\n";
    out << std::left << std::setw(14) << "condition" << std::right << std::setw(12) << "r_ss ctrl"
        << std::setw(12) << "r_ss conv" << std::setw(12) << "track dev" << std::setw(14)
        << "peak dmr deg" << std::setw(6) << "sat" << '\n';

    const auto campaign = run_campaign(loops, scenarios);

    for (std::size_t i = 0; i < campaign.size(); ++i) {
        const auto& result = campaign[i];
        const auto& run = runs[i];
        json row;
        row["label"] = run.label;
        row["v_mps"] = run.oc.v_mps;
        row["mu"] = run.oc.mu;
        row["wall_clock_s"] = result.wall_clock_s;
        if (!result.ok) {
            all_ok = false;
            row["ok"] = false;
            row["error"] = result.error;
            out << std::left << std::setw(14) << run.label << "  FAILED: " << result.error << '\n';
            manifest["rows"].push_back(std::move(row));
            continue;
        }

        const Scenario& sc = scenarios[i];
        const TimeSeries reference = step_response(run.loop.desired.tf, sc.steer.amplitude,
                                                   sc.steer.onset_s, sc.dt_s, sc.duration_s);
        const fs::path controlled_csv = dir / (run.label + "_controlled.csv");
        const fs::path conventional_csv = dir / (run.label + "_conventional.csv");
        const fs::path reference_csv = dir / (run.label + "_reference.csv");
        write_sim_csv(controlled_csv, result.controlled);
        write_sim_csv(conventional_csv, result.conventional);
        write_reference_csv(reference_csv, reference);
        row["files"] = {controlled_csv.string(), conventional_csv.string(),
                        reference_csv.string()};
        if (config.output.plot) {
            const fs::path dat = dir / (run.label + ".dat");
            write_columns_dat(dat, "t r_controlled r_conventional r_reference",
                              {&result.controlled.r, &result.conventional.r, &reference});
            row["files"].push_back(dat.string());
        }

        row["ok"] = true;
        row["steady_state_r_controlled"] = result.controlled.summary.steady_state_r;
        row["steady_state_r_conventional"] = result.conventional.summary.steady_state_r;
        row["tracking_deviation"] = result.tracking_deviation;
        row["tracking_envelope"] = config.scenario.tracking_envelope;
        row["within_envelope"] = result.tracking_deviation <= config.scenario.tracking_envelope;
        row["characteristic_hurwitz"] = result.characteristic_hurwitz;
        row["peak_delta_mr_deg"] = rad_to_deg(result.controlled.summary.peak_delta_mr_rad);
        row["saturated"] = any_saturated(result.controlled);

        out << std::left << std::setw(14) << run.label << std::right << std::setw(12) << std::fixed
            << std::setprecision(4) << result.controlled.summary.steady_state_r << std::setw(12)
            << result.conventional.summary.steady_state_r << std::setw(12)
            << result.tracking_deviation << std::setw(14)
            << rad_to_deg(result.controlled.summary.peak_delta_mr_rad) << std::setw(6)
            << (any_saturated(result.controlled) ? "yes" : "no") << '\n';
        out.unsetf(std::ios::fixed);
        manifest["rows"].push_back(std::move(row));
    }

    write_manifest(dir, std::move(manifest), timer.seconds());
    return all_ok ? kExitOk : kExitNumericalFailure;
}

int cmd_step_moment(const Config& config, const CliOptions& options, std::ostream& out) {
    const Timer timer;
    const auto runs = build_runs(config, options);

    std::vector<SteeringLoop> loops;
    for (const auto& run : runs) {
        loops.push_back(run.loop);
    }
    Scenario sc = base_scenario(config.scenario);
    sc.moment.amplitude = config.scenario.moment_step_nm;

    const fs::path dir = output_dir(config, options, "step_moment");
    fs::create_directories(dir);
    json manifest = manifest_skeleton(config, "step-moment");
    bool all_ok = true;

    out << "step-moment: " << config.scenario.moment_step_nm
        << " Nm disturbance, controlled vs conventional\n";
    out << std::left << std::setw(14) << "condition" << std::right << std::setw(12) << "r_ss ctrl"
        << std::setw(12) << "r_ss conv" << std::setw(12) << "peak r ctrl" << std::setw(14)
        << "peak dmr deg" << std::setw(6) << "sat" << '\n';

    const auto campaign = run_campaign(loops, sc);

    for (std::size_t i = 0; i < campaign.size(); ++i) {
        const auto& result = campaign[i];
        const auto& run = runs[i];
        json row;
        row["label"] = run.label;
        row["v_mps"] = run.oc.v_mps;
        row["mu"] = run.oc.mu;
        row["wall_clock_s"] = result.wall_clock_s;
        if (!result.ok) {
            all_ok = false;
            row["ok"] = false;
            row["error"] = result.error;
            out << std::left << std::setw(14) << run.label << "  FAILED: " << result.error << '\n';
            manifest["rows"].push_back(std::move(row));
            continue;
        }

        const fs::path controlled_csv = dir / (run.label + "_controlled.csv");
        const fs::path conventional_csv = dir / (run.label + "_conventional.csv");
        write_sim_csv(controlled_csv, result.controlled);
        write_sim_csv(conventional_csv, result.conventional);
        row["files"] = {controlled_csv.string(), conventional_csv.string()};
        if (config.output.plot) {
            const fs::path dat = dir / (run.label + ".dat");
            write_columns_dat(dat, "t r_controlled r_conventional",
                              {&result.controlled.r, &result.conventional.r});
            row["files"].push_back(dat.string());
        }

        row["ok"] = true;
        row["steady_state_r_controlled"] = result.controlled.summary.steady_state_r;
        row["steady_state_r_conventional"] = result.conventional.summary.steady_state_r;
        row["peak_r_controlled"] = peak_abs(result.controlled.r);
        row["peak_r_conventional"] = peak_abs(result.conventional.r);
        row["characteristic_hurwitz"] = result.characteristic_hurwitz;
        row["peak_delta_mr_deg"] = rad_to_deg(result.controlled.summary.peak_delta_mr_rad);
        row["saturated"] = any_saturated(result.controlled);

        out << std::left << std::setw(14) << run.label << std::right << std::setw(12) << std::fixed
            << std::setprecision(4) << result.controlled.summary.steady_state_r << std::setw(12)
            << result.conventional.summary.steady_state_r << std::setw(12)
            << peak_abs(result.controlled.r) << std::setw(14)
            << rad_to_deg(result.controlled.summary.peak_delta_mr_rad) << std::setw(6)
            << (any_saturated(result.controlled) ? "yes" : "no") << '\n';
        out.unsetf(std::ios::fixed);
        manifest["rows"].push_back(std::move(row));
    }

    write_manifest(dir, std::move(manifest), timer.seconds());
    return all_ok ? kExitOk : kExitNumericalFailure;
}

int cmd_actuator_compare(const Config& config, const CliOptions& options, std::ostream& out) {
    const Timer timer;
    if (config.q.kind != QConfig::Kind::limited_integrator) {
        throw ConfigError("actuator-compare requires a limited_integrator q block");
    }
    const auto runs = build_runs(config, options);
    const fs::path dir = output_dir(config, options, "actuator_compare");
    fs::create_directories(dir);

    json manifest = manifest_skeleton(config, "actuator-compare");
    bool all_ok = true;
    double grid_min_moment = std::numeric_limits<double>::infinity();

    out << "actuator-compare: limited-integrator vs standard regulator, "
        << config.scenario.moment_step_nm << " Nm step\n";
    out << std::left << std::setw(14) << "condition" << std::right << std::setw(14) << "peak lim deg"
        << std::setw(14) << "peak std deg" << std::setw(10) << "ordered" << std::setw(16)
        << "min sat Nm" << '\n';

    const double tau_q_standard = config.q.tau_s / (1.0 + config.q.gain);

    for (const auto& run : runs) {
        const Timer row_timer;
        json row;
        row["label"] = run.label;
        row["v_mps"] = run.oc.v_mps;
        row["mu"] = run.oc.mu;
        try {
            SteeringLoop standard = run.loop;
            standard.q = QFilter::first_order(tau_q_standard);

            Scenario sc = base_scenario(config.scenario);
            sc.moment.amplitude = config.scenario.moment_step_nm;

            const SimResult limited_result = simulate_block(run.loop, sc);
            const SimResult standard_result = simulate_block(standard, sc);
            const double min_moment = min_saturating_moment(run.loop, sc);
            grid_min_moment = std::min(grid_min_moment, min_moment);

            const fs::path limited_csv = dir / (run.label + "_limited.csv");
            const fs::path standard_csv = dir / (run.label + "_standard.csv");
            write_sim_csv(limited_csv, limited_result);
            write_sim_csv(standard_csv, standard_result);
            row["files"] = {limited_csv.string(), standard_csv.string()};
            if (config.output.plot) {
                const fs::path dat = dir / (run.label + ".dat");
                write_columns_dat(dat, "t dmr_limited dmr_standard",
                                  {&limited_result.delta_mr, &standard_result.delta_mr});
                row["files"].push_back(dat.string());
            }

            const double peak_limited = limited_result.summary.peak_delta_mr_rad;
            const double peak_standard = standard_result.summary.peak_delta_mr_rad;
            row["ok"] = true;
            row["peak_limited_deg"] = rad_to_deg(peak_limited);
            row["peak_standard_deg"] = rad_to_deg(peak_standard);
            row["ordering_holds"] = peak_limited <= peak_standard;
            row["min_saturating_moment_nm"] = min_moment;

            out << std::left << std::setw(14) << run.label << std::right << std::setw(14)
                << std::fixed << std::setprecision(4) << rad_to_deg(peak_limited) << std::setw(14)
                << rad_to_deg(peak_standard) << std::setw(10)
                << (peak_limited <= peak_standard ? "yes" : "NO") << std::setw(16)
                << std::setprecision(1) << min_moment << '\n';
            out.unsetf(std::ios::fixed);
        } catch (const std::exception& ex) {
            all_ok = false;
            row["ok"] = false;
            row["error"] = ex.what();
            out << std::left << std::setw(14) << run.label << "  FAILED: " << ex.what() << '\n';
        }
        row["wall_clock_s"] = row_timer.seconds();
        manifest["rows"].push_back(std::move(row));
    }

    out << "grid minimum saturating moment: " << std::fixed << std::setprecision(1)
        << grid_min_moment << " Nm (reference value "
        << config.output.reference_saturation_moment_nm << " Nm)\n";
    out.unsetf(std::ios::fixed);
    manifest["grid_min_saturating_moment_nm"] = grid_min_moment;
    manifest["reference_saturation_moment_nm"] = config.output.reference_saturation_moment_nm;

    write_manifest(dir, std::move(manifest), timer.seconds());
    return all_ok ? kExitOk : kExitNumericalFailure;
}

int cmd_bode(const Config& config, const CliOptions& options, std::ostream& out) {
    const Timer timer;
    const auto runs = build_runs(config, options);
    const fs::path dir = output_dir(config, options, "bode");

    const FrequencyGrid grid = FrequencyGrid::log_spaced(
        config.bode.omega_min_radps, config.bode.omega_max_radps,
        static_cast<std::size_t>(config.bode.points));
    const QFilter q = build_q(config.q);

    // family bound: distinct speeds from the filtered conditions, friction
    // sampled across the configured interval
    std::vector<double> speeds;
    double mu_lo = 1.0, mu_hi = 0.0;
    for (const auto& run : runs) {
        if (std::find(speeds.begin(), speeds.end(), run.oc.v_mps) == speeds.end()) {
            speeds.push_back(run.oc.v_mps);
        }
        mu_lo = std::min(mu_lo, run.oc.mu);
        mu_hi = std::max(mu_hi, run.oc.mu);
    }
    std::vector<double> mu_samples;
    const int m = config.bode.mu_samples;
    for (int i = 0; i < m; ++i) {
        mu_samples.push_back(m == 1 ? mu_lo
                                    : mu_lo + (mu_hi - mu_lo) * static_cast<double>(i) /
                                                  static_cast<double>(m - 1));
    }

    std::vector<double> bound(grid.size(), 0.0);
    for (double v : speeds) {
        const RationalTF gn =
            DesiredModel::first_order(nominal_dc_gain(config.vehicle, v), config.desired_tau_s).tf;
        for (double mu : mu_samples) {
            const auto err =
                multiplicative_error(steering_tf(config.vehicle, {v, mu}), gn, grid);
            for (std::size_t i = 0; i < bound.size(); ++i) {
                bound[i] = std::max(bound[i], err[i]);
            }
        }
    }

    const SmallGainResult verdict = small_gain_check(q, grid, bound);

    fs::create_directories(dir);
    const fs::path csv = dir / "bode.csv";
    {
        std::ofstream file(csv, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot write '" + csv.string() + "'");
        }
        file << "omega_radps,mag_q,inv_dm_bound\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mag_q = std::abs(q.tf().eval({0.0, grid.omegas[i]}));
            const double inv = bound[i] > 0.0 ? 1.0 / bound[i]
                                              : std::numeric_limits<double>::infinity();
            file << sci(grid.omegas[i]) << ',' << sci(mag_q) << ',' << sci(inv) << '\n';
        }
    }

    out << "bode: |Q| against the family uncertainty ceiling over " << speeds.size()
        << " speeds x " << mu_samples.size() << " friction samples\n";
    out << "small-gain verdict: " << (verdict.pass ? "PASS" : "FAIL")
        << "  margin = " << std::setprecision(6) << verdict.margin;
    if (!verdict.violations.empty()) {
        out << "  first violation at " << verdict.violations.front() << " rad/s ("
            << verdict.violations.size() << " grid points)";
    }
    out << '\n';

    json manifest = manifest_skeleton(config, "bode");
    json row;
    row["files"] = {csv.string()};
    row["pass"] = verdict.pass;
    row["margin"] = verdict.margin;
    row["violation_count"] = verdict.violations.size();
    if (!verdict.violations.empty()) {
        row["first_violation_radps"] = verdict.violations.front();
    }
    row["ok"] = true;
    manifest["rows"].push_back(std::move(row));
    write_manifest(dir, std::move(manifest), timer.seconds());
    return kExitOk;
}

int cmd_check(const Config& config, const CliOptions& options, std::ostream& out) {
    const auto runs = build_runs(config, options);
    const QFilter q = build_q(config.q);

    bool all_pass = true;
    out << "check: filter and per-condition loop diagnostics\n";
    out << "q: proper=" << (q.tf().proper() ? "yes" : "no")
        << " stable=" << (is_hurwitz(q.tf().den()) ? "yes" : "no")
        << " dc=" << std::setprecision(6) << q.tf().dc_gain()
        << " integrator_count=" << integrator_count(q) << '\n';

    for (const auto& run : runs) {
        const RationalTF qgn = run.loop.q.tf() / run.loop.desired.tf;
        const bool causal = qgn.proper();
        bool hurwitz = false;
        std::string roots_str;
        try {
            const Polynomial cp = characteristic_polynomial(
                steering_tf(run.loop.params, run.loop.condition), run.loop.desired, run.loop.q);
            hurwitz = is_hurwitz(cp);
            std::ostringstream rs;
            rs << std::setprecision(4);
            for (const auto& root : roots(cp)) {
                rs << " (" << root.real();
                if (root.imag() != 0.0) {
                    rs << (root.imag() > 0 ? "+" : "") << root.imag() << "j";
                }
                rs << ")";
            }
            roots_str = rs.str();
        } catch (const std::exception& ex) {
            roots_str = std::string(" error: ") + ex.what();
        }
        const bool pass = causal && hurwitz;
        all_pass = all_pass && pass;
        out << std::left << std::setw(14) << run.label << (pass ? "PASS" : "FAIL")
            << "  causal=" << (causal ? "yes" : "no") << " hurwitz=" << (hurwitz ? "yes" : "no")
            << "  roots:" << roots_str << '\n';
    }
    return all_pass ? kExitOk : kExitNumericalFailure;
}

}  // namespace modreg::cli
