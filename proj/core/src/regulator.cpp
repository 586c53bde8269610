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

#include "modreg/regulator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "modreg/roots.hpp"

namespace modreg {

namespace {

constexpr double kDcGainTol = 1e-9;

void validate_q(const RationalTF& tf) {
    if (!tf.proper()) {
        throw std::invalid_argument("QFilter: filter must be proper");
    }
    if (!is_hurwitz(tf.den())) {
        throw std::invalid_argument("QFilter: filter must be stable");
    }
    if (std::abs(tf.dc_gain()) > 1.0 + kDcGainTol) {
        throw std::invalid_argument("QFilter: |dc gain| must not exceed 1");
    }
}

bool is_identically_one(const RationalTF& tf) {
    return tf.num() == tf.den();
}

}  // namespace

QFilter::QFilter(RationalTF tf, Kind kind) : tf_(std::move(tf)), kind_(std::move(kind)) {
    validate_q(tf_);
}

QFilter QFilter::first_order(double tau_q_s) {
    if (!(tau_q_s > 0.0)) {
        throw std::invalid_argument("QFilter::first_order: time constant must be positive");
    }
    return {RationalTF{Polynomial{1.0}, Polynomial{1.0, tau_q_s}}, FirstOrderQ{tau_q_s}};
}

QFilter QFilter::limited_integrator(double gain, double tau_s, const RationalTF& shaping) {
    if (!(gain > 0.0) || !(tau_s > 0.0)) {
        throw std::invalid_argument("QFilter::limited_integrator: gain and tau must be positive");
    }
    if (!shaping.proper()) {
        throw std::invalid_argument("QFilter::limited_integrator: shaping factor must be proper");
    }
    if (shaping.den().eval(0.0) == 0.0) {
        throw std::invalid_argument("QFilter::limited_integrator: shaping denominator vanishes at s = 0");
    }
    const Polynomial lag{1.0, tau_s};
    Polynomial num = gain * shaping.num();
    Polynomial den = lag * shaping.den() + num;
    return {RationalTF{std::move(num), std::move(den)}, LimitedIntegratorQ{gain, tau_s, shaping}};
}

QFilter QFilter::general(RationalTF tf) {
    return {std::move(tf), GeneralQ{}};
}

DesiredModel DesiredModel::first_order(double dc_gain_1ps, double tau_s) {
    if (!(tau_s > 0.0)) {
        throw std::invalid_argument("DesiredModel: time constant must be positive");
    }
    if (dc_gain_1ps == 0.0) {
        throw std::invalid_argument("DesiredModel: dc gain must be nonzero");
    }
    return {RationalTF{Polynomial{dc_gain_1ps}, Polynomial{1.0, tau_s}}, dc_gain_1ps, tau_s};
}

RationalTF q_over_one_minus_q(const QFilter& q) {
    // Q/(1-Q) = n/(d-n); the shared d factor drops out symbolically.
    const RationalTF& tf = q.tf();
    if (is_identically_one(tf)) {
        throw std::domain_error("q_over_one_minus_q: Q is identically 1");
    }
    Polynomial den = tf.den() - tf.num();
    if (den.is_zero()) {
        throw std::domain_error("q_over_one_minus_q: Q is identically 1");
    }
    return {tf.num(), std::move(den)};
}

int integrator_count(const QFilter& q) {
    return q_over_one_minus_q(q).den().trailing_zero_multiplicity();
}

ClosedLoopMaps closed_loop_maps(const RationalTF& plant, const DesiredModel& nominal,
                                const QFilter& q) {
    const Polynomial& ng = plant.num();
    const Polynomial& dg = plant.den();
    const Polynomial& nn = nominal.tf.num();
    const Polynomial& dn = nominal.tf.den();
    const Polynomial& nq = q.tf().num();
    const Polynomial& dq = q.tf().den();

    // G_n(1-Q) + G Q over the common denominator dn*dq*dg.
    Polynomial char_num = nn * (dq - nq) * dg + ng * nq * dn;
    if (char_num.is_zero()) {
        throw std::domain_error("closed_loop_maps: characteristic polynomial is identically zero");
    }

    ClosedLoopMaps maps;
    maps.from_reference = RationalTF{nn * ng * dq, char_num};
    maps.from_disturbance = RationalTF{nn * (dq - nq) * dg, char_num};
    maps.from_noise = RationalTF{-(ng * nq * dn), char_num};

    Polynomial loop_den = dg * nn * (dq - nq);
    if (!loop_den.is_zero()) {
        maps.loop_gain = RationalTF{ng * nq * dn, std::move(loop_den)};
    }
    return maps;
}

Polynomial characteristic_polynomial(const RationalTF& plant, const DesiredModel& nominal,
                                     const QFilter& q) {
    Polynomial char_num = nominal.tf.num() * (q.tf().den() - q.tf().num()) * plant.den() +
                          plant.num() * q.tf().num() * nominal.tf.den();
    // Canonical: monic leading coefficient.
    if (!char_num.is_zero()) {
        char_num /= char_num.leading();
    }
    return char_num;
}

std::vector<double> multiplicative_error(const RationalTF& plant, const RationalTF& nominal,
                                         const FrequencyGrid& grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double w : grid.omegas) {
        const std::complex<double> s{0.0, w};
        const std::complex<double> gn = nominal.eval(s);
        if (gn == std::complex<double>{0.0, 0.0}) {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        out.push_back(std::abs(plant.eval(s) / gn - 1.0));
    }
    return out;
}

SmallGainResult small_gain_check(const QFilter& q, const FrequencyGrid& grid,
                                 std::span<const double> error_bound) {
    if (error_bound.size() != grid.size()) {
        throw std::invalid_argument("small_gain_check: bound length does not match the grid");
    }
    SmallGainResult result;
    result.pass = true;
    result.margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double bound = error_bound[i];
        if (!std::isfinite(bound)) {
            continue;  // per-point marker
        }
        const double mag_q = std::abs(q.tf().eval({0.0, grid.omegas[i]}));
        const double ceiling = bound > 0.0 ? 1.0 / bound : std::numeric_limits<double>::infinity();
        if (mag_q > 0.0) {
            result.margin = std::min(result.margin, ceiling / mag_q);
        }
        if (!(mag_q < ceiling)) {
            result.pass = false;
            result.violations.push_back(grid.omegas[i]);
        }
    }
    return result;
}

}  // namespace modreg
