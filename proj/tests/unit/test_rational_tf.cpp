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

#include "modreg/rational_tf.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "modreg/roots.hpp"
#include "modreg/vehicle.hpp"

using modreg::Polynomial;
using modreg::RationalTF;
using Complex = std::complex<double>;

namespace {

RationalTF random_tf(std::mt19937& rng, int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    auto draw = [&](int d) {
        std::vector<double> c(static_cast<std::size_t>(d) + 1);
        for (auto& v : c) v = coeff(rng);
        if (c.back() == 0.0) c.back() = 1.0;
        return Polynomial{c};
    };
    const int dn = deg(rng) + 1;
    return {draw(deg(rng)), draw(dn)};
}

Complex random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979);
    const double r = radius(rng);
    const double a = angle(rng);
    return {r * std::cos(a), r * std::sin(a)};
}

}  // namespace

TEST_CASE("canonical form has a monic denominator and is idempotent") {
    const RationalTF g{Polynomial{2.0, 4.0}, Polynomial{6.0, 3.0}};
    CHECK(g.den().leading() == 1.0);
    CHECK(g.den() == Polynomial{2.0, 1.0});
    const RationalTF again{g.num(), g.den()};
    CHECK(again == g);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(RationalTF(Polynomial{1.0}, Polynomial{}), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with pointwise complex evaluation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalTF g = random_tf(rng);
        const RationalTF h = random_tf(rng);
        for (int pt = 0; pt < 20; ++pt) {
            const Complex s = random_point(rng);
            const Complex dg = g.den().eval(s), dh = h.den().eval(s);
            if (std::abs(dg) < 1e-3 || std::abs(dh) < 1e-3) continue;

            const Complex sum = (g + h).eval(s);
            const Complex prod = (g * h).eval(s);
            const Complex want_sum = g.eval(s) + h.eval(s);
            const Complex want_prod = g.eval(s) * h.eval(s);
            CHECK(std::abs(sum - want_sum) <= 1e-10 * std::max(1.0, std::abs(want_sum)));
            CHECK(std::abs(prod - want_prod) <= 1e-10 * std::max(1.0, std::abs(want_prod)));

            const Complex one_minus = 1.0 + g.eval(s) * h.eval(s);
            if (std::abs(one_minus) < 1e-3) continue;
            const Complex fb = modreg::feedback(g, h, -1).eval(s);
            const Complex want_fb = g.eval(s) / one_minus;
            CHECK(std::abs(fb - want_fb) <= 1e-10 * std::max(1.0, std::abs(want_fb)));
        }
    }
}

TEST_CASE("unity negative feedback of an integrator") {
    const RationalTF integrator{Polynomial{1.0}, Polynomial{0.0, 1.0}};
    const RationalTF closed = modreg::feedback(integrator, RationalTF::constant(1.0), -1);
    CHECK(closed.num() == Polynomial{1.0});
    CHECK(closed.den() == Polynomial{1.0, 1.0});
}

TEST_CASE("multiplication by one is the identity") {
    std::mt19937 rng(11);
    const RationalTF g = random_tf(rng);
    const RationalTF gi = g * RationalTF::constant(1.0);
    for (int pt = 0; pt < 10; ++pt) {
        const Complex s = random_point(rng);
        if (std::abs(g.den().eval(s)) < 1e-3) continue;
        CHECK(std::abs(gi.eval(s) - g.eval(s)) <= 1e-12 * std::max(1.0, std::abs(g.eval(s))));
    }
}

TEST_CASE("feedback degeneracy is reported") {
    // g = 1, h = 1, sign = +1: denominator 1 - 1 = 0
    CHECK_THROWS_AS(modreg::feedback(RationalTF::constant(1.0), RationalTF::constant(1.0), +1),
                    std::domain_error);
}

TEST_CASE("dc gain") {
    const RationalTF low_pass{Polynomial{1.0}, Polynomial{1.0, 0.01}};
    CHECK(low_pass.dc_gain() == doctest::Approx(1.0));

    // limited-integrator filter with gain 10: dc = 10/11
    const RationalTF limited{Polynomial{10.0}, Polynomial{11.0, 0.006}};
    CHECK(limited.dc_gain() == doctest::Approx(10.0 / 11.0).epsilon(1e-12));

    const RationalTF integrator{Polynomial{1.0}, Polynomial{0.0, 1.0}};
    CHECK_THROWS_AS(integrator.dc_gain(), std::domain_error);
}

TEST_CASE("vehicle steering dc gain at 20 m/s dry road") {
    // Independently computed: b0/a0 = 414489600000 / 64521561600
    const auto g = modreg::steering_tf(modreg::VehicleParams::mid_size_sedan(), {20.0, 1.0});
    CHECK(g.dc_gain() == doctest::Approx(6.424047864334392).epsilon(1e-12));
}

TEST_CASE("poles of simple factors") {
    const RationalTF lag{Polynomial{1.0}, Polynomial{1.0, 0.01}};
    const auto p1 = lag.poles();
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].real() == doctest::Approx(-100.0));
    CHECK(p1[0].imag() == doctest::Approx(0.0));

    const RationalTF two_poles{Polynomial{1.0}, Polynomial{2.0, 3.0, 1.0}};
    auto p2 = two_poles.poles();
    REQUIRE(p2.size() == 2);
    std::sort(p2.begin(), p2.end(), [](auto a, auto b) { return a.real() < b.real(); });
    CHECK(p2[0].real() == doctest::Approx(-2.0));
    CHECK(p2[1].real() == doctest::Approx(-1.0));

    CHECK(RationalTF::constant(5.0).poles().empty());
}

TEST_CASE("vehicle denominator roots match the quadratic formula") {
    const auto g = modreg::steering_tf(modreg::VehicleParams::mid_size_sedan(), {30.0, 0.3});
    // quadratic-formula oracle on the monic (a2=1) denominator
    const double a0 = g.den()[0], a1 = g.den()[1];
    const double disc = a1 * a1 - 4.0 * a0;
    REQUIRE(disc < 0.0);
    const Complex want{-a1 / 2.0, std::sqrt(-disc) / 2.0};
    auto ps = g.poles();
    REQUIRE(ps.size() == 2);
    std::sort(ps.begin(), ps.end(), [](auto a, auto b) { return a.imag() < b.imag(); });
    CHECK(std::abs(ps[1] - want) <= 1e-9 * std::abs(want));
    CHECK(std::abs(ps[0] - std::conj(want)) <= 1e-9 * std::abs(want));
}

TEST_CASE("hurwitz verdicts") {
    CHECK(modreg::is_hurwitz(Polynomial{1.0, 1.0}));
    CHECK_FALSE(modreg::is_hurwitz(Polynomial{-1.0, 1.0}));
}

TEST_CASE("root recovery from known factorizations up to degree 6") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> re(-4.0, -0.2);
    std::uniform_real_distribution<double> im(0.2, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> want;
        std::uniform_int_distribution<int> pairs(0, 3);
        const int npairs = pairs(rng);
        for (int i = 0; i < npairs; ++i) {
            const Complex z{re(rng), im(rng)};
            want.push_back(z);
            want.push_back(std::conj(z));
        }
        while (want.size() < 2 || want.size() % 2 == 1) {
            want.push_back({re(rng), 0.0});
        }
        if (want.size() > 6) want.resize(6);
        const Polynomial p = Polynomial::from_roots(want, 2.0);
        auto got = modreg::roots(p);
        REQUIRE(got.size() == want.size());
        for (const Complex& w : want) {
            double best = 1e30;
            for (const Complex& g : got) best = std::min(best, std::abs(g - w));
            CHECK(best <= 1e-8 * std::max(1.0, std::abs(w)));
        }
    }
}

TEST_CASE("minreal cancels matched pairs only") {
    // (s+1)(s+2) / ((s+1)(s+3)) -> (s+2)/(s+3)
    const Polynomial num = Polynomial{1.0, 1.0} * Polynomial{2.0, 1.0};
    const Polynomial den = Polynomial{1.0, 1.0} * Polynomial{3.0, 1.0};
    const RationalTF g{num, den};
    const RationalTF reduced = g.minreal();
    CHECK(reduced.num().degree() == 1);
    CHECK(reduced.den().degree() == 1);
    CHECK(reduced.dc_gain() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    // distinct roots survive
    const RationalTF h{Polynomial{2.0, 1.0}, Polynomial{3.0, 1.0}};
    CHECK(h.minreal() == h.minreal().minreal());
    CHECK(h.minreal().den().degree() == 1);
}

TEST_CASE("relative degree and properness") {
    const RationalTF strictly{Polynomial{1.0}, Polynomial{1.0, 1.0}};
    CHECK(strictly.strictly_proper());
    CHECK(strictly.proper());
    const RationalTF biproper{Polynomial{1.0, 2.0}, Polynomial{1.0, 1.0}};
    CHECK(biproper.proper());
    CHECK_FALSE(biproper.strictly_proper());
    const RationalTF improper{Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0, 1.0}};
    CHECK_FALSE(improper.proper());
}

TEST_CASE("reciprocal of the zero function is rejected") {
    CHECK_THROWS_AS(RationalTF().reciprocal(), std::domain_error);
    const RationalTF lag{Polynomial{2.0}, Polynomial{1.0, 1.0}};
    const RationalTF inv = lag.reciprocal();
    CHECK(inv.eval({1.0, 0.0}).real() == doctest::Approx(1.0 / lag.eval({1.0, 0.0}).real()));
}
