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

#include "modreg/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace modreg::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(out)) {
            throw std::invalid_argument("");
        }
        return out;
    } catch (const std::exception&) {
        throw ConfigError(line, "expected a number, got '" + value + "'");
    }
}

std::vector<double> parse_double_list(const std::string& value, int line) {
    std::istringstream in(value);
    std::vector<double> out;
    std::string token;
    while (in >> token) {
        out.push_back(parse_double(token, line));
    }
    if (out.empty()) {
        throw ConfigError(line, "expected at least one number");
    }
    return out;
}

bool parse_switch(const std::string& value, int line) {
    if (value == "on" || value == "true") return true;
    if (value == "off" || value == "false") return false;
    throw ConfigError(line, "expected on/off, got '" + value + "'");
}

std::string format_double(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, result.ptr};
}

std::string format_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += " ";
        out += format_double(values[i]);
    }
    return out;
}

}  // namespace

std::vector<OperatingCondition> Config::conditions() const {
    std::vector<OperatingCondition> out;
    for (double v : v_mps) {
        for (double m : mu) {
            out.push_back({v, m});
        }
    }
    return out;
}

Config parse_config(const std::string& text) {
    Config config;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::set<std::string> seen;
    int line = 0;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') {
            continue;
        }
        if (s.front() == '[') {
            if (s.back() != ']') {
                throw ConfigError(line, "unterminated section header");
            }
            section = trim(s.substr(1, s.size() - 2));
            static const std::set<std::string> known{"vehicle",  "conditions", "q",
                                                     "desired",  "scenario",   "bode",
                                                     "output"};
            if (!known.count(section)) {
                throw ConfigError(line, "unknown section '" + section + "'");
            }
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line, "expected 'key = value'");
        }
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(line, "expected 'key = value'");
        }
        if (section.empty()) {
            throw ConfigError(line, "key '" + key + "' appears before any section");
        }
        const std::string qualified = section + "." + key;
        if (!seen.insert(qualified).second) {
            throw ConfigError(line, "duplicate key '" + qualified + "'");
        }

        if (section == "vehicle") {
            if (key == "lf_m") config.vehicle.lf_m = parse_double(value, line);
            else if (key == "lr_m") config.vehicle.lr_m = parse_double(value, line);
            else if (key == "mass_kg") config.vehicle.mass_kg = parse_double(value, line);
            else if (key == "inertia_kgm2") config.vehicle.inertia_kgm2 = parse_double(value, line);
            else if (key == "cf0_nprad") config.vehicle.cf0_nprad = parse_double(value, line);
            else if (key == "cr0_nprad") config.vehicle.cr0_nprad = parse_double(value, line);
            else if (key == "mu_nominal") config.vehicle.mu_nominal = parse_double(value, line);
            else throw ConfigError(line, "unknown key '" + qualified + "'");
        } else if (section == "conditions") {
            if (key == "v_mps") config.v_mps = parse_double_list(value, line);
            else if (key == "mu") config.mu = parse_double_list(value, line);
            else throw ConfigError(line, "unknown key '" + qualified + "'");
        } else if (section == "q") {
            if (key == "kind") {
                if (value == "first_order") config.q.kind = QConfig::Kind::first_order;
                else if (value == "limited_integrator") config.q.kind = QConfig::Kind::limited_integrator;
                else if (value == "general") config.q.kind = QConfig::Kind::general;
                else throw ConfigError(line, "unknown q kind '" + value + "'");
            } else if (key == "gain") config.q.gain = parse_double(value, line);
            else if (key == "tau_s") config.q.tau_s = parse_double(value, line);
            else if (key == "tau_q_s") config.q.tau_q_s = parse_double(value, line);
            else if (key == "num") config.q.num = parse_double_list(value, line);
            else if (key == "den") config.q.den = parse_double_list(value, line);
            else throw ConfigError(line, "unknown key '" + qualified + "'");
        } else if (section == "desired") {
            if (key == "tau_n_s") config.desired_tau_s = parse_double(value, line);
            else throw ConfigError(line, "unknown key '" + qualified + "'");
        } else if (section == "scenario") {
            if (key == "dt_s") config.scenario.dt_s = parse_double(value, line);
            else if (key == "duration_s") config.scenario.duration_s = parse_double(value, line);
            else if (key == "steer_step_rad") {
                if (value == "normalized") {
                    config.scenario.steer_normalized = true;
                    config.scenario.steer_step_rad = 0.0;
                } else {
                    config.scenario.steer_normalized = false;
                    config.scenario.steer_step_rad = parse_double(value, line);
                }
            } else if (key == "steer_onset_s") config.scenario.steer_onset_s = parse_double(value, line);
            else if (key == "moment_step_nm") config.scenario.moment_step_nm = parse_double(value, line);
            else if (key == "moment_onset_s") config.scenario.moment_onset_s = parse_double(value, line);
            else if (key == "saturation") config.scenario.saturation = parse_switch(value, line);
            else if (key == "sat_limit_deg") config.scenario.sat_limit_deg = parse_double(value, line);
            else if (key == "feedback_tap") {
                if (value == "post_saturation") config.scenario.pre_saturation_tap = false;
                else if (value == "pre_saturation") config.scenario.pre_saturation_tap = true;
                else throw ConfigError(line, "feedback_tap must be post_saturation or pre_saturation");
            } else if (key == "tracking_envelope") config.scenario.tracking_envelope = parse_double(value, line);
            else throw ConfigError(line, "unknown key '" + qualified + "'");
        } else if (section == "bode") {
            if (key == "omega_min_radps") config.bode.omega_min_radps = parse_double(value, line);
            else if (key == "omega_max_radps") config.bode.omega_max_radps = parse_double(value, line);
            else if (key == "points") config.bode.points = static_cast<int>(parse_double(value, line));
            else if (key == "mu_samples") config.bode.mu_samples = static_cast<int>(parse_double(value, line));
            else throw ConfigError(line, "unknown key '" + qualified + "'");
        } else if (section == "output") {
            if (key == "directory") config.output.directory = value;
            else if (key == "formats") {
                config.output.csv = false;
                config.output.plot = false;
                std::istringstream fmts(value);
                std::string fmt;
                while (fmts >> fmt) {
                    if (fmt == "csv") config.output.csv = true;
                    else if (fmt == "plot") config.output.plot = true;
                    else throw ConfigError(line, "unknown output format '" + fmt + "'");
                }
                if (!config.output.csv) {
                    throw ConfigError(line, "output formats must include csv");
                }
            } else if (key == "reference_saturation_moment_nm") {
                config.output.reference_saturation_moment_nm = parse_double(value, line);
            } else throw ConfigError(line, "unknown key '" + qualified + "'");
        }
    }

    // cross-field validation with module-level diagnostics
    try {
        config.vehicle.validate();
        for (const auto& oc : config.conditions()) {
            oc.validate();
        }
        if (!(config.desired_tau_s > 0.0)) {
            throw std::invalid_argument("desired tau_n_s must be positive");
        }
        if (!(config.scenario.sat_limit_deg > 0.0)) {
            throw std::invalid_argument("sat_limit_deg must be positive");
        }
        if (!(config.scenario.dt_s > 0.0) || config.scenario.dt_s > config.scenario.duration_s) {
            throw std::invalid_argument("need 0 < dt_s <= duration_s");
        }
        if (config.bode.points < 2 || !(config.bode.omega_min_radps > 0.0) ||
            !(config.bode.omega_max_radps > config.bode.omega_min_radps)) {
            throw std::invalid_argument("bode grid needs 0 < omega_min < omega_max and points >= 2");
        }
        if (config.bode.mu_samples < 1) {
            throw std::invalid_argument("bode mu_samples must be >= 1");
        }
        (void)build_q(config.q);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
    }
    return config;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string render_config(const Config& c) {
    std::ostringstream out;
    out << "[vehicle]\n";
    out << "lf_m = " << format_double(c.vehicle.lf_m) << "\n";
    out << "lr_m = " << format_double(c.vehicle.lr_m) << "\n";
    out << "mass_kg = " << format_double(c.vehicle.mass_kg) << "\n";
    out << "inertia_kgm2 = " << format_double(c.vehicle.inertia_kgm2) << "\n";
    out << "cf0_nprad = " << format_double(c.vehicle.cf0_nprad) << "\n";
    out << "cr0_nprad = " << format_double(c.vehicle.cr0_nprad) << "\n";
    out << "mu_nominal = " << format_double(c.vehicle.mu_nominal) << "\n";
    out << "\n[conditions]\n";
    out << "v_mps = " << format_list(c.v_mps) << "\n";
    out << "mu = " << format_list(c.mu) << "\n";
    out << "\n[q]\n";
    switch (c.q.kind) {
        case QConfig::Kind::first_order:
            out << "kind = first_order\n";
            out << "tau_q_s = " << format_double(c.q.tau_q_s) << "\n";
            break;
        case QConfig::Kind::limited_integrator:
            out << "kind = limited_integrator\n";
            out << "gain = " << format_double(c.q.gain) << "\n";
            out << "tau_s = " << format_double(c.q.tau_s) << "\n";
            break;
        case QConfig::Kind::general:
            out << "kind = general\n";
            out << "num = " << format_list(c.q.num) << "\n";
            out << "den = " << format_list(c.q.den) << "\n";
            break;
    }
    out << "\n[desired]\n";
    out << "tau_n_s = " << format_double(c.desired_tau_s) << "\n";
    out << "\n[scenario]\n";
    out << "dt_s = " << format_double(c.scenario.dt_s) << "\n";
    out << "duration_s = " << format_double(c.scenario.duration_s) << "\n";
    if (c.scenario.steer_normalized) {
        out << "steer_step_rad = normalized\n";
    } else {
        out << "steer_step_rad = " << format_double(c.scenario.steer_step_rad) << "\n";
    }
    out << "steer_onset_s = " << format_double(c.scenario.steer_onset_s) << "\n";
    out << "moment_step_nm = " << format_double(c.scenario.moment_step_nm) << "\n";
    out << "moment_onset_s = " << format_double(c.scenario.moment_onset_s) << "\n";
    out << "saturation = " << (c.scenario.saturation ? "on" : "off") << "\n";
    out << "sat_limit_deg = " << format_double(c.scenario.sat_limit_deg) << "\n";
    out << "feedback_tap = " << (c.scenario.pre_saturation_tap ? "pre_saturation" : "post_saturation")
        << "\n";
    out << "tracking_envelope = " << format_double(c.scenario.tracking_envelope) << "\n";
    out << "\n[bode]\n";
    out << "omega_min_radps = " << format_double(c.bode.omega_min_radps) << "\n";
    out << "omega_max_radps = " << format_double(c.bode.omega_max_radps) << "\n";
    out << "points = " << c.bode.points << "\n";
    out << "mu_samples = " << c.bode.mu_samples << "\n";
    out << "\n[output]\n";
    out << "directory = " << c.output.directory << "\n";
    out << "formats = csv" << (c.output.plot ? " plot" : "") << "\n";
    out << "reference_saturation_moment_nm = "
        << format_double(c.output.reference_saturation_moment_nm) << "\n";
    return out.str();
}

QFilter build_q(const QConfig& q) {
    switch (q.kind) {
        case QConfig::Kind::first_order:
            return QFilter::first_order(q.tau_q_s);
        case QConfig::Kind::limited_integrator:
            return QFilter::limited_integrator(q.gain, q.tau_s);
        case QConfig::Kind::general:
            return QFilter::general(RationalTF{Polynomial{q.num}, Polynomial{q.den}});
    }
    throw std::logic_error("build_q: unreachable");
}

SteeringLoop build_loop(const Config& config, const OperatingCondition& oc) {
    SteeringLoop loop = SteeringLoop::make(config.vehicle, oc, build_q(config.q),
                                           config.desired_tau_s);
    loop.sat_limit_rad = deg_to_rad(config.scenario.sat_limit_deg);
    loop.tap = config.scenario.pre_saturation_tap ? FeedbackTap::pre_saturation
                                                  : FeedbackTap::post_saturation;
    return loop;
}

Scenario base_scenario(const ScenarioConfig& sc) {
    Scenario out;
    out.dt_s = sc.dt_s;
    out.duration_s = sc.duration_s;
    out.steer = {0.0, sc.steer_onset_s};
    out.moment = {0.0, sc.moment_onset_s};
    out.saturation_enabled = sc.saturation;
    out.validate();
    return out;
}

}  // namespace modreg::cli
