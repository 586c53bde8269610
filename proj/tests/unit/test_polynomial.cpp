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

#include "modreg/polynomial.hpp"

#include <doctest.h>

#include <random>

using modreg::Polynomial;

TEST_CASE("product of conjugate binomials is a difference of squares") {
    const Polynomial p{1.0, 1.0};
    const Polynomial q{1.0, -1.0};
    CHECK(p * q == Polynomial{1.0, 0.0, -1.0});
}

TEST_CASE("binomial square") {
    const Polynomial p{1.0, 1.0};
    CHECK(p * p == Polynomial{1.0, 2.0, 1.0});
}

TEST_CASE("limited-integrator denominator assembly at unit shaping") {
    // (tau s + 1)*1 + K*1 with K = 10, tau = 0.006
    const Polynomial lag{1.0, 0.006};
    const Polynomial result = lag * Polynomial{1.0} + Polynomial{10.0};
    CHECK(result == Polynomial{11.0, 0.006});
}

TEST_CASE("trailing zero multiplicity") {
    CHECK(Polynomial{0.0, 0.0, 1.0}.trailing_zero_multiplicity() == 2);

    // first-order unity-dc filter: d - n = tau_q s, one origin root
    const double tau_q = 0.01;
    const Polynomial first_order_diff = Polynomial{1.0, tau_q} - Polynomial{1.0};
    CHECK(first_order_diff.trailing_zero_multiplicity() == 1);

    // limited integrator: d - n = (tau s + 1 + K) - K = tau s + 1, no origin root
    const double k = 10.0, tau = 0.006;
    const Polynomial limited_diff = Polynomial{1.0 + k, tau} - Polynomial{k};
    CHECK(limited_diff.trailing_zero_multiplicity() == 0);

    CHECK_THROWS_AS(Polynomial{}.trailing_zero_multiplicity(), std::domain_error);
}

TEST_CASE("trailing zero multiplicity is scale invariant") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    std::uniform_int_distribution<int> degree(1, 6);
    std::uniform_int_distribution<int> zeros(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const int nz = zeros(rng);
        std::vector<double> c(static_cast<std::size_t>(nz), 0.0);
        const int deg = degree(rng);
        for (int i = 0; i <= deg; ++i) {
            double v = coeff(rng);
            if (i == 0 && v == 0.0) v = 1.0;
            c.push_back(v);
        }
        const Polynomial p{c};
        const int base = p.trailing_zero_multiplicity();
        for (double scale : {1e-7, 3.0, 1e9}) {
            CHECK((p * scale).trailing_zero_multiplicity() == base);
        }
    }
}

TEST_CASE("degree convolution and trimming") {
    const Polynomial p{2.0, 0.0, 3.0};
    const Polynomial q{0.0, 1.0};
    CHECK((p * q).degree() == 3);
    CHECK(Polynomial{1.0, 0.0, 0.0}.degree() == 0);
    CHECK((p - p).is_zero());
}

TEST_CASE("evaluation matches Horner expansion") {
    const Polynomial p{1.0, -2.0, 0.5};
    CHECK(p.eval(2.0) == doctest::Approx(1.0 - 4.0 + 2.0));
    const std::complex<double> s{0.0, 1.0};
    const auto v = p.eval(s);
    CHECK(v.real() == doctest::Approx(0.5));
    CHECK(v.imag() == doctest::Approx(-2.0));
}

TEST_CASE("from_roots rebuilds real coefficients") {
    const std::vector<std::complex<double>> rts{{-1.0, 2.0}, {-1.0, -2.0}};
    const Polynomial p = Polynomial::from_roots(rts, 3.0);
    // 3 (s^2 + 2 s + 5)
    CHECK(p[0] == doctest::Approx(15.0));
    CHECK(p[1] == doctest::Approx(6.0));
    CHECK(p[2] == doctest::Approx(3.0));
}
