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

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace modreg {

/// Default relative tolerance for counting trailing (low-order) zero
/// coefficients, measured against the largest coefficient magnitude.
inline constexpr double kTrailingZeroTol = 1e-9;

/// Real polynomial in ascending powers: coeffs[k] multiplies s^k.
///
/// Canonical form: the highest-order coefficient is nonzero unless the
/// polynomial is the zero polynomial {0}. Values are immutable after
/// construction apart from the arithmetic assignment operators.
class Polynomial {
  public:
    /// Zero polynomial {0}.
    Polynomial() : coeffs_{0.0} {}

    /// From ascending coefficients; trailing high-order exact zeros are trimmed.
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    static Polynomial constant(double c) { return Polynomial{{c}}; }

    /// Real polynomial with the given roots (conjugate pairs must both be
    /// present) scaled by `leading`. Imaginary residue from pairing is dropped.
    static Polynomial from_roots(std::span<const std::complex<double>> roots,
                                 double leading = 1.0);

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficient of s^k; zero beyond the stored degree.
    double operator[](std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    /// Index of the highest nonzero coefficient (0 for constants and for the
    /// zero polynomial).
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    double leading() const { return coeffs_.back(); }

    double eval(double s) const;
    std::complex<double> eval(std::complex<double> s) const;

    /// Multiplicity of s = 0 as a root: the largest j such that
    /// |coeffs[i]| <= tol * max|coeffs| for all i < j. Throws on the zero
    /// polynomial. Scale-invariant by construction.
    int trailing_zero_multiplicity(double tol = kTrailingZeroTol) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(double k);
    Polynomial& operator/=(double k);

    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial p, double k) { return p *= k; }
    friend Polynomial operator*(double k, Polynomial p) { return p *= k; }
    friend Polynomial operator/(Polynomial p, double k) { return p /= k; }

    bool operator==(const Polynomial&) const = default;

  private:
    void trim();

    std::vector<double> coeffs_;
};

}  // namespace modreg
