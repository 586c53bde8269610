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

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "modreg/frequency.hpp"
#include "modreg/polynomial.hpp"
#include "modreg/rational_tf.hpp"

namespace modreg {

struct FirstOrderQ {
    double tau_q_s;
};

/// Loop integrator replaced by the bounded term gain/(tau s + 1), optionally
/// shaped by an extra proper factor R(s).
struct LimitedIntegratorQ {
    double gain;
    double tau_s;
    RationalTF shaping;
};

struct GeneralQ {};

/// Low-pass filter that sets the regulator bandwidth. Validated at
/// construction: proper, stable, |dc gain| <= 1 (tolerance 1e-9).
class QFilter {
  public:
    using Kind = std::variant<FirstOrderQ, LimitedIntegratorQ, GeneralQ>;

    /// Unity-dc first-order low pass 1/(tau_q s + 1).
    static QFilter first_order(double tau_q_s);

    /// Back-solves the filter whose loop term Q/(1-Q) equals
    /// (gain/(tau s + 1)) * R(s):  Q = gain*n_R / ((tau s + 1) d_R + gain*n_R).
    /// For R = 1 this is the first-order filter with dc gain/(1+gain) and
    /// time constant tau/(1+gain). Requires gain > 0, tau > 0, R proper with
    /// d_R(0) != 0; throws if the resulting filter violates the invariants.
    static QFilter limited_integrator(double gain, double tau_s,
                                      const RationalTF& shaping = RationalTF::constant(1.0));

    static QFilter general(RationalTF tf);

    const RationalTF& tf() const { return tf_; }
    const Kind& kind() const { return kind_; }

  private:
    QFilter(RationalTF tf, Kind kind);

    RationalTF tf_;
    Kind kind_;
};

/// First-order reference model K/(tau s + 1) the regulator drives the plant
/// toward; stable with dc gain dc_gain_1ps.
struct DesiredModel {
    RationalTF tf;
    double dc_gain_1ps;
    double tau_s;

    static DesiredModel first_order(double dc_gain_1ps, double tau_s);
};

/// Q/(1-Q) in canonical form, computed structurally as n/(d - n) so that no
/// numeric root cancellation is involved. Throws if Q is identically 1.
RationalTF q_over_one_minus_q(const QFilter& q);

/// Number of open-loop integrators the filter contributes: the multiplicity
/// of s = 0 in the denominator of Q/(1-Q).
int integrator_count(const QFilter& q);

/// The closed-loop transfer functions of the compensated plant. All maps
/// share one characteristic polynomial by construction. The loop gain
/// L = G Q / (G_n (1-Q)) is absent for Q identically 1 (infinite loop gain).
struct ClosedLoopMaps {
    RationalTF from_reference;    ///< plant output per new-input unit
    RationalTF from_disturbance;  ///< output disturbance sensitivity 1/(1+L)
    RationalTF from_noise;        ///< sensor-noise map -L/(1+L)
    std::optional<RationalTF> loop_gain;
};

/// Exact rational closed-loop maps over the shared characteristic
/// denominator. Throws std::domain_error when that polynomial is
/// identically zero.
ClosedLoopMaps closed_loop_maps(const RationalTF& plant, const DesiredModel& nominal,
                                const QFilter& q);

/// Numerator polynomial of G_n (1-Q) + G Q over the common denominator,
/// canonicalized; its roots are the closed-loop poles.
Polynomial characteristic_polynomial(const RationalTF& plant, const DesiredModel& nominal,
                                     const QFilter& q);

/// |G(jw)/G_n(jw) - 1| per grid point; non-finite marker where G_n vanishes
/// on the grid.
std::vector<double> multiplicative_error(const RationalTF& plant, const RationalTF& nominal,
                                         const FrequencyGrid& grid);

struct SmallGainResult {
    bool pass = false;
    double margin = 0.0;                ///< min over grid of (1/bound)/|Q|
    std::vector<double> violations;     ///< frequencies where |Q| >= 1/bound
};

/// Sufficient robust-stability test |Q(jw)| < 1/bound(w) at every grid point.
/// `error_bound` must align with the grid; non-finite bound entries are
/// skipped as markers.
SmallGainResult small_gain_check(const QFilter& q, const FrequencyGrid& grid,
                                 std::span<const double> error_bound);

}  // namespace modreg
