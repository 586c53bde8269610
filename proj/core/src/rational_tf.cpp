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

#include <cmath>
#include <stdexcept>

#include "modreg/roots.hpp"

namespace modreg {

RationalTF::RationalTF(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::invalid_argument("RationalTF: denominator is the zero polynomial");
    }
    canonicalize();
}

void RationalTF::canonicalize() {
    const double lead = den_.leading();
    num_ /= lead;
    den_ /= lead;
}

double RationalTF::dc_gain() const {
    const double d0 = den_.eval(0.0);
    if (d0 == 0.0) {
        throw std::domain_error("dc_gain: pole at the origin, gain is infinite");
    }
    return num_.eval(0.0) / d0;
}

std::vector<std::complex<double>> RationalTF::poles() const { return roots(den_); }

std::vector<std::complex<double>> RationalTF::zeros() const {
    if (num_.is_zero()) {
        return {};
    }
    return roots(num_);
}

RationalTF RationalTF::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal: transfer function is identically zero");
    }
    return {den_, num_};
}

RationalTF RationalTF::minreal(double tol) const {
    if (is_zero()) {
        return *this;
    }
    auto zs = zeros();
    auto ps = poles();
    const double num_lead = num_.leading();

    std::vector<bool> zero_used(zs.size(), false);
    std::vector<bool> pole_used(ps.size(), false);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (pole_used[j]) {
                continue;
            }
            const double scale = std::max({1.0, std::abs(zs[i]), std::abs(ps[j])});
            if (std::abs(zs[i] - ps[j]) <= tol * scale) {
                zero_used[i] = true;
                pole_used[j] = true;
                break;
            }
        }
    }

    std::vector<std::complex<double>> kept_zeros;
    std::vector<std::complex<double>> kept_poles;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (!zero_used[i]) {
            kept_zeros.push_back(zs[i]);
        }
    }
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!pole_used[j]) {
            kept_poles.push_back(ps[j]);
        }
    }
    return {Polynomial::from_roots(kept_zeros, num_lead), Polynomial::from_roots(kept_poles)};
}

RationalTF operator+(const RationalTF& lhs, const RationalTF& rhs) {
    return {lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

RationalTF operator-(const RationalTF& lhs, const RationalTF& rhs) {
    return {lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

RationalTF operator*(const RationalTF& lhs, const RationalTF& rhs) {
    return {lhs.num_ * rhs.num_, lhs.den_ * rhs.den_};
}

RationalTF operator/(const RationalTF& lhs, const RationalTF& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("RationalTF: division by the zero function");
    }
    return {lhs.num_ * rhs.den_, lhs.den_ * rhs.num_};
}

RationalTF operator*(const RationalTF& lhs, double k) {
    return {lhs.num_ * k, lhs.den_};
}

RationalTF feedback(const RationalTF& g, const RationalTF& h, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("feedback: sign must be +1 or -1");
    }
    // g/(1 - sign*g*h) = (ng*dh) / (dg*dh - sign*ng*nh)
    Polynomial den = g.den() * h.den() - static_cast<double>(sign) * (g.num() * h.num());
    if (den.is_zero()) {
        throw std::domain_error("feedback: algebraic degeneracy, closed-loop denominator vanishes");
    }
    return {g.num() * h.den(), std::move(den)};
}

}  // namespace modreg
