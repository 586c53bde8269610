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

#include "modreg/state_space.hpp"

#include <cmath>
#include <stdexcept>

namespace modreg {

StateSpace::StateSpace(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c,
                       Eigen::MatrixXd d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("StateSpace: A must be square");
    }
    if (B.rows() != A.rows() || C.cols() != A.rows() || D.rows() != C.rows() ||
        D.cols() != B.cols()) {
        throw std::invalid_argument("StateSpace: dimension mismatch");
    }
}

StateSpace to_state_space(const RationalTF& g) {
    if (!g.proper()) {
        throw std::invalid_argument("to_state_space: transfer function is improper");
    }
    const int n = g.den().degree();

    // den is monic by canonical form; pad the numerator to full length.
    std::vector<double> beta(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i <= g.num().degree(); ++i) {
        beta[static_cast<std::size_t>(i)] = g.num()[static_cast<std::size_t>(i)];
    }
    const double d_term = beta[static_cast<std::size_t>(n)];

    if (n == 0) {
        StateSpace ss;
        ss.D(0, 0) = d_term;
        return ss;
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = 1.0;
    }
    for (int i = 0; i < n; ++i) {
        a(n - 1, i) = -g.den()[static_cast<std::size_t>(i)];
    }
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, 1);
    b(n - 1, 0) = 1.0;
    Eigen::MatrixXd c(1, n);
    for (int i = 0; i < n; ++i) {
        c(0, i) = beta[static_cast<std::size_t>(i)] - d_term * g.den()[static_cast<std::size_t>(i)];
    }
    Eigen::MatrixXd d(1, 1);
    d(0, 0) = d_term;
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("expm: matrix must be square");
    }
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return Eigen::MatrixXd(0, 0);
    }

    // Scale so the series argument has norm <= 0.5, sum the Taylor series to
    // relative term norm 1e-16, then undo the scaling by repeated squaring.
    const double norm = m.lpNorm<Eigen::Infinity>();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXd scaled = m / std::ldexp(1.0, squarings);

    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 64; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        sum += term;
        if (term.lpNorm<Eigen::Infinity>() <= 1e-16 * sum.lpNorm<Eigen::Infinity>()) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

StateSpace discretize_zoh(const StateSpace& ss, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("discretize_zoh: dt must be positive");
    }
    const Eigen::Index n = ss.states();
    const Eigen::Index m = ss.inputs();
    if (n == 0) {
        return ss;  // pure gain, unchanged
    }

    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + m, n + m);
    aug.topLeftCorner(n, n) = ss.A * dt;
    aug.topRightCorner(n, m) = ss.B * dt;
    const Eigen::MatrixXd phi = expm(aug);

    return {phi.topLeftCorner(n, n), phi.topRightCorner(n, m), ss.C, ss.D};
}

std::complex<double> eval(const StateSpace& ss, std::complex<double> s) {
    if (ss.inputs() != 1 || ss.outputs() != 1) {
        throw std::invalid_argument("eval: SISO systems only");
    }
    const Eigen::Index n = ss.states();
    if (n == 0) {
        return ss.D(0, 0);
    }
    Eigen::MatrixXcd resolvent = s * Eigen::MatrixXcd::Identity(n, n) - ss.A.cast<std::complex<double>>();
    Eigen::VectorXcd x = resolvent.partialPivLu().solve(ss.B.cast<std::complex<double>>().col(0));
    return (ss.C.cast<std::complex<double>>() * x)(0) + ss.D(0, 0);
}

TimeSeries simulate(const StateSpace& discrete_ss, const TimeSeries& u) {
    if (static_cast<Eigen::Index>(u.channels) != discrete_ss.inputs()) {
        throw std::invalid_argument("simulate: input channel count does not match B");
    }
    const std::size_t steps = u.samples();
    const auto outputs = static_cast<std::size_t>(discrete_ss.outputs());

    Eigen::VectorXd x = Eigen::VectorXd::Zero(discrete_ss.states());
    Eigen::VectorXd uk(discrete_ss.inputs());
    TimeSeries y = TimeSeries::zeros(u.dt, outputs, steps);
    for (std::size_t k = 0; k < steps; ++k) {
        for (std::size_t c = 0; c < u.channels; ++c) {
            uk(static_cast<Eigen::Index>(c)) = u(k, c);
        }
        const Eigen::VectorXd yk = discrete_ss.C * x + discrete_ss.D * uk;
        for (std::size_t c = 0; c < outputs; ++c) {
            y(k, c) = yk(static_cast<Eigen::Index>(c));
        }
        x = discrete_ss.A * x + discrete_ss.B * uk;
    }
    return y;
}

TimeSeries step_response(const RationalTF& g, double amplitude, double onset_s,
                         double dt, double duration_s) {
    const auto steps = static_cast<std::size_t>(std::floor(duration_s / dt)) + 1;
    TimeSeries u = TimeSeries::zeros(dt, 1, steps);
    for (std::size_t k = 0; k < steps; ++k) {
        if (static_cast<double>(k) * dt >= onset_s) {
            u(k) = amplitude;
        }
    }
    return simulate(discretize_zoh(to_state_space(g), dt), u);
}

}  // namespace modreg
