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

#include <doctest.h>

#include <cmath>

#include "modreg/vehicle.hpp"

using modreg::Polynomial;
using modreg::RationalTF;
using modreg::StateSpace;
using modreg::TimeSeries;

TEST_CASE("pure gain realization has no states") {
    const auto ss = modreg::to_state_space(RationalTF::constant(5.0));
    CHECK(ss.states() == 0);
    CHECK(ss.D(0, 0) == doctest::Approx(5.0));
}

TEST_CASE("first-order canonical realization") {
    const auto ss = modreg::to_state_space(RationalTF{Polynomial{1.0}, Polynomial{2.0, 1.0}});
    REQUIRE(ss.states() == 1);
    CHECK(ss.A(0, 0) == doctest::Approx(-2.0));
    CHECK(ss.B(0, 0) == doctest::Approx(1.0));
    CHECK(ss.C(0, 0) == doctest::Approx(1.0));
    CHECK(ss.D(0, 0) == doctest::Approx(0.0));
}

TEST_CASE("improper input is rejected") {
    const RationalTF improper{Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0, 1.0}};
    CHECK_THROWS_AS(modreg::to_state_space(improper), std::invalid_argument);
}

TEST_CASE("realization reproduces the rational response at log-spaced frequencies") {
    const auto g = modreg::steering_tf(modreg::VehicleParams::mid_size_sedan(), {20.0, 1.0});
    const auto ss = modreg::to_state_space(g);
    REQUIRE(ss.states() == 2);
    for (int i = 0; i < 20; ++i) {
        const double w = std::pow(10.0, -2.0 + 7.0 * i / 19.0);
        const std::complex<double> s{0.0, w};
        const auto want = g.eval(s);
        const auto got = modreg::eval(ss, s);
        CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("zoh of an integrator") {
    StateSpace ss{Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Ones(1, 1),
                  Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Zero(1, 1)};
    const auto d = modreg::discretize_zoh(ss, 0.1);
    CHECK(d.A(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.B(0, 0) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("zoh of a scalar lag is the exact exponential") {
    const double tau = 0.037;
    Eigen::MatrixXd a(1, 1), b(1, 1), c(1, 1), d(1, 1);
    a << -1.0 / tau;
    b << 1.0;
    c << 1.0;
    d << 0.0;
    for (double dt : {1e-4, 1e-3, 0.05}) {
        const auto dss = modreg::discretize_zoh(StateSpace{a, b, c, d}, dt);
        CHECK(dss.A(0, 0) == doctest::Approx(std::exp(-dt / tau)).epsilon(1e-13));
    }
}

TEST_CASE("first-order step response is exact at every sample") {
    const double tau = 0.02, dt = 1e-3;
    const RationalTF g{Polynomial{1.0}, Polynomial{1.0, tau}};
    const TimeSeries y = modreg::step_response(g, 1.0, 0.0, dt, 0.5);
    for (std::size_t k = 0; k < y.samples(); ++k) {
        const double t = static_cast<double>(k) * dt;
        CHECK(std::abs(y(k) - (1.0 - std::exp(-t / tau))) <= 1e-9);
    }
}

TEST_CASE("simulate: zero input gives zero output") {
    const auto g = modreg::steering_tf(modreg::VehicleParams::mid_size_sedan(), {20.0, 1.0});
    const auto dss = modreg::discretize_zoh(modreg::to_state_space(g), 1e-3);
    const TimeSeries u = TimeSeries::zeros(1e-3, 1, 100);
    const TimeSeries y = modreg::simulate(dss, u);
    for (std::size_t k = 0; k < y.samples(); ++k) {
        CHECK(y(k) == 0.0);
    }
}

TEST_CASE("simulate: unit step into an integrator is a ramp") {
    StateSpace ss{Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Ones(1, 1),
                  Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Zero(1, 1)};
    const double dt = 0.01;
    const auto dss = modreg::discretize_zoh(ss, dt);
    const TimeSeries u{dt, std::vector<double>(50, 1.0)};
    const TimeSeries y = modreg::simulate(dss, u);
    for (std::size_t k = 0; k < y.samples(); ++k) {
        CHECK(y(k) == doctest::Approx(static_cast<double>(k) * dt).epsilon(1e-12));
    }
}

TEST_CASE("steering step approaches the dc gain by final value") {
    const auto g = modreg::steering_tf(modreg::VehicleParams::mid_size_sedan(), {20.0, 1.0});
    const TimeSeries y = modreg::step_response(g, 1.0, 0.0, 1e-3, 5.0);
    const double final_sample = y(y.samples() - 1);
    CHECK(std::abs(final_sample - g.dc_gain()) <= 1e-3 * std::abs(g.dc_gain()));
}

TEST_CASE("simulate rejects mismatched channel counts") {
    const auto dss = modreg::discretize_zoh(
        modreg::to_state_space(RationalTF{Polynomial{1.0}, Polynomial{1.0, 1.0}}), 1e-2);
    const TimeSeries u = TimeSeries::zeros(1e-2, 2, 10);
    CHECK_THROWS_AS(modreg::simulate(dss, u), std::invalid_argument);
}

TEST_CASE("expm matches the closed form for a rotation generator") {
    Eigen::MatrixXd m(2, 2);
    const double theta = 1.3;
    m << 0.0, -theta, theta, 0.0;
    const Eigen::MatrixXd e = modreg::expm(m);
    CHECK(e(0, 0) == doctest::Approx(std::cos(theta)).epsilon(1e-13));
    CHECK(e(0, 1) == doctest::Approx(-std::sin(theta)).epsilon(1e-13));
    CHECK(e(1, 0) == doctest::Approx(std::sin(theta)).epsilon(1e-13));
    CHECK(e(1, 1) == doctest::Approx(std::cos(theta)).epsilon(1e-13));
}

TEST_CASE("discretization rejects a nonpositive step") {
    StateSpace ss{Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Ones(1, 1),
                  Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Zero(1, 1)};
    CHECK_THROWS_AS(modreg::discretize_zoh(ss, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(modreg::discretize_zoh(ss, -1e-3), std::invalid_argument);
}

TEST_CASE("state-space dimension mismatches are rejected") {
    CHECK_THROWS_AS(StateSpace(Eigen::MatrixXd::Zero(2, 1), Eigen::MatrixXd::Ones(2, 1),
                               Eigen::MatrixXd::Ones(1, 2), Eigen::MatrixXd::Zero(1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(StateSpace(Eigen::MatrixXd::Zero(2, 2), Eigen::MatrixXd::Ones(1, 1),
                               Eigen::MatrixXd::Ones(1, 2), Eigen::MatrixXd::Zero(1, 1)),
                    std::invalid_argument);
}
