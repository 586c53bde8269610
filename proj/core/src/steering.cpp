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

#include "modreg/steering.hpp"

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "modreg/roots.hpp"
#include "modreg/state_space.hpp"

namespace modreg {

namespace {

constexpr double kDesiredGainTol = 1e-9;

RationalTF q_over_gn(const SteeringLoop& loop) {
    RationalTF qgn = loop.q.tf() / loop.desired.tf;
    if (!qgn.proper()) {
        throw std::invalid_argument(
            "steering: Q/G_n is improper; the Q relative degree must be at least "
            "that of the desired model for a causal regulator");
    }
    return qgn;
}

// Closed-loop realization with inputs (steer, moment, clamp excess) and
// outputs (r, actuator command m, delta_f). The clamp excess e enters where
// the applied correction does (delta_mr = m - e), so e = 0 reproduces the
// linear loop exactly and a clamped step only holds e over one sample.
struct AssembledLoop {
    StateSpace ss;
    double feedthrough_e_to_m = 0.0;  // D entry of the excess -> command path
};

AssembledLoop assemble(const SteeringLoop& loop) {
    loop.validate();

    const StateSpace veh = to_state_space(steering_tf(loop.params, loop.condition));
    const StateSpace dist = to_state_space(disturbance_tf(loop.params, loop.condition));
    const StateSpace qb = to_state_space(loop.q.tf());
    const StateSpace qgn = to_state_space(q_over_gn(loop));
    if (!loop.actuator_gain.proper()) {
        throw std::invalid_argument("steering: actuator gain must be proper");
    }
    const StateSpace act = to_state_space(loop.actuator_gain);

    const Eigen::Index nv = veh.states(), nw = dist.states(), nq = qb.states(),
                       ng = qgn.states(), ns = act.states();
    const Eigen::Index n = nv + nw + nq + ng + ns;
    const Eigen::Index ov = 0, ow = nv, oq = nv + nw, og = nv + nw + nq, os = n - ns;

    // Signal vector z = [r, c, m, delta_f] with inputs u = [steer, moment, e]:
    //   r  = Cv xv + Dv df + Cw xw + Dw Mz
    //   c  = Cq xq + Dq tap - (Cg xg + Dg r),  tap = df  (post-clamp feedback)
    //                                          tap = steer + m  (pre-clamp)
    //   m  = Cs xs + Ds c
    //   df = steer + m - e
    Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
    Eigen::MatrixXd hx = Eigen::MatrixXd::Zero(4, n);
    Eigen::MatrixXd hu = Eigen::MatrixXd::Zero(4, 3);

    p(0, 3) = veh.D(0, 0);
    hx.block(0, ov, 1, nv) = veh.C;
    hx.block(0, ow, 1, nw) = dist.C;
    hu(0, 1) = dist.D(0, 0);

    if (loop.tap == FeedbackTap::post_saturation) {
        p(1, 3) = qb.D(0, 0);
    } else {
        p(1, 2) = qb.D(0, 0);
        hu(1, 0) = qb.D(0, 0);
    }
    p(1, 0) = -qgn.D(0, 0);
    hx.block(1, oq, 1, nq) = qb.C;
    hx.block(1, og, 1, ng) = -qgn.C;

    p(2, 1) = act.D(0, 0);
    hx.block(2, os, 1, ns) = act.C;

    p(3, 2) = 1.0;
    hu(3, 0) = 1.0;
    hu(3, 2) = -1.0;

    const Eigen::Matrix4d loop_matrix = Eigen::Matrix4d::Identity() - p;
    Eigen::FullPivLU<Eigen::Matrix4d> lu(loop_matrix);
    if (!lu.isInvertible()) {
        throw std::domain_error("steering: algebraic loop has no unique solution");
    }
    const Eigen::MatrixXd fx = lu.solve(hx);
    const Eigen::MatrixXd fu = lu.solve(hu);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, 3);
    a.block(ov, ov, nv, nv) = veh.A;
    a.block(ow, ow, nw, nw) = dist.A;
    a.block(oq, oq, nq, nq) = qb.A;
    a.block(og, og, ng, ng) = qgn.A;
    a.block(os, os, ns, ns) = act.A;

    // Block inputs: vehicle <- delta_f, disturbance <- moment,
    // Q <- tap, Q/G_n <- r, actuator <- c.
    a.block(ov, 0, nv, n) += veh.B * fx.row(3);
    b.block(ov, 0, nv, 3) += veh.B * fu.row(3);
    b.block(ow, 1, nw, 1) += dist.B;
    if (loop.tap == FeedbackTap::post_saturation) {
        a.block(oq, 0, nq, n) += qb.B * fx.row(3);
        b.block(oq, 0, nq, 3) += qb.B * fu.row(3);
    } else {
        // tap = steer + m
        a.block(oq, 0, nq, n) += qb.B * fx.row(2);
        b.block(oq, 0, nq, 3) += qb.B * fu.row(2);
        b.block(oq, 0, nq, 1) += qb.B;
    }
    a.block(og, 0, ng, n) += qgn.B * fx.row(0);
    b.block(og, 0, ng, 3) += qgn.B * fu.row(0);
    a.block(os, 0, ns, n) += act.B * fx.row(1);
    b.block(os, 0, ns, 3) += act.B * fu.row(1);

    Eigen::MatrixXd c(3, n);
    c.row(0) = fx.row(0);  // r
    c.row(1) = fx.row(2);  // m
    c.row(2) = fx.row(3);  // delta_f
    Eigen::MatrixXd d(3, 3);
    d.row(0) = fu.row(0);
    d.row(1) = fu.row(2);
    d.row(2) = fu.row(3);

    AssembledLoop out{StateSpace{std::move(a), std::move(b), std::move(c), std::move(d)}, 0.0};
    out.feedthrough_e_to_m = out.ss.D(1, 2);
    return out;
}

double step_value(const StepSignal& sig, double t) {
    return t >= sig.onset_s ? sig.amplitude : 0.0;
}

SimSummary summarize(const SimResult& result) {
    return {peak_abs(result.delta_mr), steady_state(result.r)};
}

}  // namespace

SteeringLoop SteeringLoop::make(const VehicleParams& params, const OperatingCondition& condition,
                                QFilter q, double desired_tau_s) {
    SteeringLoop loop{
        params,
        condition,
        DesiredModel::first_order(nominal_dc_gain(params, condition.v_mps), desired_tau_s),
        std::move(q),
    };
    loop.validate();
    return loop;
}

void SteeringLoop::validate() const {
    params.validate();
    condition.validate();
    if (!(sat_limit_rad > 0.0)) {
        throw std::invalid_argument("SteeringLoop: saturation limit must be positive");
    }
    const double kn = nominal_dc_gain(params, condition.v_mps);
    if (std::abs(desired.dc_gain_1ps - kn) > kDesiredGainTol * std::max(1.0, std::abs(kn))) {
        throw std::invalid_argument(
            "SteeringLoop: desired-model dc gain must equal the nominal vehicle gain at this speed");
    }
}

void Scenario::validate() const {
    if (!(duration_s > 0.0) || !(dt_s > 0.0) || dt_s > duration_s) {
        throw std::invalid_argument("Scenario: need 0 < dt <= duration");
    }
    for (const StepSignal& sig : {steer, moment}) {
        if (sig.onset_s < 0.0 || sig.onset_s > duration_s) {
            throw std::invalid_argument("Scenario: step onset must lie within [0, duration]");
        }
    }
}

ChannelTFs build_channel_tfs(const SteeringLoop& loop) {
    loop.validate();
    const RationalTF g = steering_tf(loop.params, loop.condition);
    const RationalTF gd = disturbance_tf(loop.params, loop.condition);
    const Polynomial& ng = g.num();
    const Polynomial& dg = g.den();
    const Polynomial& ndm = gd.num();
    const Polynomial& nn = loop.desired.tf.num();
    const Polynomial& dn = loop.desired.tf.den();
    const Polynomial& nq = loop.q.tf().num();
    const Polynomial& dq = loop.q.tf().den();
    const Polynomial& ns = loop.actuator_gain.num();
    const Polynomial& ds = loop.actuator_gain.den();

    if (!(gd.den() == dg)) {
        throw std::logic_error("build_channel_tfs: vehicle channels must share one denominator");
    }

    // Characteristic numerator of G_n(1 - G_sa Q) + G G_sa Q over dn*ds*dq*dg;
    // the vehicle/desired/Q denominators cancel structurally in each channel.
    const Polynomial sQ = ds * dq - ns * nq;  // ds*dq*(1 - G_sa Q)
    Polynomial char_num = nn * sQ * dg + ng * (ns * nq) * dn;
    if (char_num.is_zero()) {
        throw std::domain_error("build_channel_tfs: characteristic polynomial is identically zero");
    }

    ChannelTFs channels;
    channels.r_from_steer = RationalTF{nn * ng * ds * dq, char_num};
    channels.r_from_moment = RationalTF{nn * sQ * ndm, char_num};
    channels.dmr_from_steer = RationalTF{ns * nq * (nn * dg - ng * dn), char_num};
    channels.dmr_from_moment = RationalTF{-(ns * nq * ndm * dn), char_num};
    return channels;
}

SimResult simulate_block(const SteeringLoop& loop, const Scenario& sc) {
    sc.validate();
    const AssembledLoop assembled = assemble(loop);
    const StateSpace dss = discretize_zoh(assembled.ss, sc.dt_s);
    const double d_me = assembled.feedthrough_e_to_m;
    const double limit = loop.sat_limit_rad;

    const auto steps = static_cast<std::size_t>(std::floor(sc.duration_s / sc.dt_s)) + 1;
    SimResult result;
    result.r = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.delta_f = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.delta_mr = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.delta_mr_unsat = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.saturated.assign(steps, 0);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(dss.states());
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * sc.dt_s;
        u(0) = step_value(sc.steer, t);
        u(1) = step_value(sc.moment, t);
        u(2) = 0.0;

        // Actuator command with the clamp inactive, then the piecewise-linear
        // resolution of e = m - clamp(m) if the command exceeds the limit.
        // The output recomputation below carries the e feedthrough, so y(1)
        // is the command consistent with the clamped correction.
        const Eigen::Vector3d base = dss.C * x + dss.D * u;
        double e = 0.0;
        if (sc.saturation_enabled && std::abs(base(1)) > limit) {
            const double bound = base(1) > 0.0 ? limit : -limit;
            if (std::abs(1.0 - d_me) < 1e-12) {
                throw std::domain_error("simulate_block: clamp algebraic loop is singular");
            }
            e = (base(1) - bound) / (1.0 - d_me);
        }
        u(2) = e;

        const Eigen::Vector3d y = base + dss.D.col(2) * e;
        result.r(k) = y(0);
        result.delta_mr_unsat(k) = y(1);
        result.delta_mr(k) = y(1) - e;
        result.delta_f(k) = y(2);
        result.saturated[k] = std::abs(y(1)) > limit ? 1 : 0;

        x = dss.A * x + dss.B * u;
    }
    result.summary = summarize(result);
    return result;
}

SimResult simulate_conventional(const SteeringLoop& loop, const Scenario& sc) {
    loop.validate();
    sc.validate();
    const StateSpace veh = discretize_zoh(to_state_space(steering_tf(loop.params, loop.condition)), sc.dt_s);
    const StateSpace dist = discretize_zoh(to_state_space(disturbance_tf(loop.params, loop.condition)), sc.dt_s);

    const auto steps = static_cast<std::size_t>(std::floor(sc.duration_s / sc.dt_s)) + 1;
    SimResult result;
    result.r = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.delta_f = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.delta_mr = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.delta_mr_unsat = TimeSeries::zeros(sc.dt_s, 1, steps);
    result.saturated.assign(steps, 0);

    Eigen::VectorXd xv = Eigen::VectorXd::Zero(veh.states());
    Eigen::VectorXd xw = Eigen::VectorXd::Zero(dist.states());
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * sc.dt_s;
        const double steer = step_value(sc.steer, t);
        const double moment = step_value(sc.moment, t);
        result.delta_f(k) = steer;
        result.r(k) = (veh.C * xv)(0) + veh.D(0, 0) * steer + (dist.C * xw)(0) + dist.D(0, 0) * moment;
        xv = veh.A * xv + veh.B * steer;
        xw = dist.A * xw + dist.B * moment;
    }
    result.summary = summarize(result);
    return result;
}

double normalized_steer_step(const SteeringLoop& loop) {
    const double kn = nominal_dc_gain(loop.params, loop.condition.v_mps);
    if (kn == 0.0) {
        throw std::domain_error("normalized_steer_step: nominal dc gain is zero");
    }
    return 1.0 / kn;
}

double peak_actuator_per_unit_moment(const SteeringLoop& loop, const Scenario& sc) {
    sc.validate();
    const ChannelTFs channels = build_channel_tfs(loop);
    if (!is_hurwitz(channels.dmr_from_moment.den())) {
        throw std::domain_error("peak_actuator_per_unit_moment: closed loop is unstable");
    }
    const TimeSeries response = step_response(channels.dmr_from_moment, 1.0,
                                              sc.moment.onset_s, sc.dt_s, sc.duration_s);
    return peak_abs(response);
}

double min_saturating_moment(const SteeringLoop& loop, const Scenario& sc) {
    const double per_unit = peak_actuator_per_unit_moment(loop, sc);
    if (per_unit <= 0.0) {
        throw std::domain_error("min_saturating_moment: correction response is degenerate");
    }
    return loop.sat_limit_rad / per_unit;
}

std::vector<CampaignRow> run_campaign(std::span<const SteeringLoop> loops,
                                      std::span<const Scenario> scenarios) {
    if (loops.empty()) {
        throw std::invalid_argument("run_campaign: no loops given");
    }
    if (scenarios.size() != 1 && scenarios.size() != loops.size()) {
        throw std::invalid_argument("run_campaign: need one scenario, or one per loop");
    }
    std::vector<CampaignRow> rows;
    rows.reserve(loops.size());
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const SteeringLoop& loop = loops[i];
        const Scenario& sc = scenarios[scenarios.size() == 1 ? 0 : i];
        const auto start = std::chrono::steady_clock::now();
        CampaignRow row;
        row.condition = loop.condition;
        try {
            row.controlled = simulate_block(loop, sc);
            row.conventional = simulate_conventional(loop, sc);
            row.characteristic_hurwitz = is_hurwitz(characteristic_polynomial(
                steering_tf(loop.params, loop.condition), loop.desired, loop.q));
            if (sc.steer.amplitude != 0.0) {
                const TimeSeries reference = step_response(
                    loop.desired.tf, sc.steer.amplitude, sc.steer.onset_s, sc.dt_s, sc.duration_s);
                double dev = 0.0;
                for (std::size_t k = 0; k < reference.samples(); ++k) {
                    dev = std::max(dev, std::abs(row.controlled.r(k) - reference(k)));
                }
                row.tracking_deviation = dev;
            }
            row.ok = true;
        } catch (const std::exception& ex) {
            row.ok = false;
            row.error = ex.what();
        }
        row.wall_clock_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CampaignRow> run_campaign(std::span<const SteeringLoop> loops, const Scenario& sc) {
    return run_campaign(loops, std::span<const Scenario>{&sc, 1});
}

}  // namespace modreg
