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

#include <Eigen/Dense>
#include <complex>

#include "modreg/rational_tf.hpp"
#include "modreg/time_series.hpp"

namespace modreg {

/// Real (A, B, C, D) realization. n = 0 is a pure gain D. Whether the system
/// is continuous or discrete is contextual (see discretize_zoh / simulate).
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd C;
    Eigen::MatrixXd D;

    StateSpace() : A(0, 0), B(0, 1), C(1, 0), D(Eigen::MatrixXd::Zero(1, 1)) {}
    StateSpace(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c, Eigen::MatrixXd d);

    Eigen::Index states() const { return A.rows(); }
    Eigen::Index inputs() const { return B.cols(); }
    Eigen::Index outputs() const { return C.rows(); }
};

/// Controllable-canonical realization of a proper SISO transfer function.
/// Throws std::invalid_argument for improper input.
StateSpace to_state_space(const RationalTF& g);

/// e^M by scaling-and-squaring of the truncated Taylor series; terms are added
/// until the next term's norm falls below 1e-16 of the accumulated sum, so the
/// truncation error is far below the 1e-12 target.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

/// Exact zero-order-hold discretization at step dt via the matrix exponential
/// of the augmented [A B; 0 0] block. Throws for dt <= 0.
StateSpace discretize_zoh(const StateSpace& ss, double dt);

/// SISO transfer-function value C (sI - A)^-1 B + D at a complex point.
std::complex<double> eval(const StateSpace& ss, std::complex<double> s);

/// x_{k+1} = A x_k + B u_k, y_k = C x_k + D u_k from zero initial state.
/// Input channel count must match B's columns.
TimeSeries simulate(const StateSpace& discrete_ss, const TimeSeries& u);

/// ZOH step response of a proper transfer function: amplitude applied from the
/// first sample with t >= onset, simulated over [0, duration].
TimeSeries step_response(const RationalTF& g, double amplitude, double onset_s,
                         double dt, double duration_s);

}  // namespace modreg
