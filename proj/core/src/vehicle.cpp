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

#include "modreg/vehicle.hpp"

#include <stdexcept>

namespace modreg {

namespace {

struct DenCoeffs {
    double a0, a1, a2;
};

DenCoeffs den_coeffs(const VehicleParams& p, double v, double mu) {
    const double cf = mu * p.cf0_nprad;
    const double cr = mu * p.cr0_nprad;
    const double l = p.lf_m + p.lr_m;
    return {
        cf * cr * l * l + (cr * p.lr_m - cf * p.lf_m) * p.mass_kg * v * v,
        (cf * (p.inertia_kgm2 + p.lf_m * p.lf_m * p.mass_kg) +
         cr * (p.inertia_kgm2 + p.lr_m * p.lr_m * p.mass_kg)) * v,
        p.inertia_kgm2 * p.mass_kg * v * v,
    };
}

}  // namespace

void VehicleParams::validate() const {
    if (!(lf_m > 0.0 && lr_m > 0.0 && mass_kg > 0.0 && inertia_kgm2 > 0.0 &&
          cf0_nprad > 0.0 && cr0_nprad > 0.0 && mu_nominal > 0.0)) {
        throw std::invalid_argument("VehicleParams: all fields must be strictly positive");
    }
}

void OperatingCondition::validate() const {
    if (!(v_mps > 0.0)) {
        throw std::invalid_argument("OperatingCondition: speed must be positive");
    }
    if (!(mu > 0.0 && mu <= 1.0)) {
        throw std::invalid_argument("OperatingCondition: friction must lie in (0, 1]");
    }
}

RationalTF steering_tf(const VehicleParams& p, const OperatingCondition& oc) {
    p.validate();
    oc.validate();
    const double cf = oc.mu * p.cf0_nprad;
    const double cr = oc.mu * p.cr0_nprad;
    const double v = oc.v_mps;
    const double b0 = cf * cr * (p.lf_m + p.lr_m) * v;
    const double b1 = cf * p.lf_m * p.mass_kg * v * v;
    const auto [a0, a1, a2] = den_coeffs(p, v, oc.mu);
    return {Polynomial{b0, b1}, Polynomial{a0, a1, a2}};
}

RationalTF disturbance_tf(const VehicleParams& p, const OperatingCondition& oc) {
    p.validate();
    oc.validate();
    const double cf = oc.mu * p.cf0_nprad;
    const double cr = oc.mu * p.cr0_nprad;
    const double v = oc.v_mps;
    const auto [a0, a1, a2] = den_coeffs(p, v, oc.mu);
    return {Polynomial{(cf + cr) * v, p.mass_kg * v * v}, Polynomial{a0, a1, a2}};
}

double nominal_dc_gain(const VehicleParams& p, double v_mps) {
    p.validate();
    if (!(v_mps > 0.0)) {
        throw std::invalid_argument("nominal_dc_gain: speed must be positive");
    }
    const double cf = p.mu_nominal * p.cf0_nprad;
    const double cr = p.mu_nominal * p.cr0_nprad;
    const double b0 = cf * cr * (p.lf_m + p.lr_m) * v_mps;
    const auto [a0, a1, a2] = den_coeffs(p, v_mps, p.mu_nominal);
    (void)a1;
    (void)a2;
    if (a0 == 0.0) {
        throw std::domain_error("nominal_dc_gain: critical-speed degeneracy, a0 = 0");
    }
    return b0 / a0;
}

}  // namespace modreg
