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
#include <vector>

#include "modreg/polynomial.hpp"

namespace modreg {

/// Rational transfer function num(s)/den(s) over the reals.
///
/// Canonical form: den is monic with num scaled accordingly. Arithmetic is
/// exact polynomial algebra; common roots are never cancelled implicitly.
/// `minreal` is the explicit, tolerance-based opt-in.
class RationalTF {
  public:
    /// The zero function 0/1.
    RationalTF() : num_{}, den_{1.0} {}

    /// Throws std::invalid_argument if den is the zero polynomial.
    RationalTF(Polynomial num, Polynomial den);

    static RationalTF constant(double k) { return {Polynomial::constant(k), Polynomial::constant(1.0)}; }

    /// The Laplace variable s.
    static RationalTF s() { return {Polynomial{0.0, 1.0}, Polynomial::constant(1.0)}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    int relative_degree() const { return den_.degree() - num_.degree(); }
    bool proper() const { return is_zero() || relative_degree() >= 0; }
    bool strictly_proper() const { return is_zero() || relative_degree() > 0; }

    std::complex<double> eval(std::complex<double> s) const {
        return num_.eval(s) / den_.eval(s);
    }

    /// num(0)/den(0). Throws std::domain_error when den(0) = 0 (pole at the
    /// origin; the gain is infinite).
    double dc_gain() const;

    std::vector<std::complex<double>> poles() const;
    std::vector<std::complex<double>> zeros() const;

    /// 1/G. Throws if G is identically zero.
    RationalTF reciprocal() const;

    /// Cancels numerator/denominator root pairs closer than `tol` relative to
    /// their magnitude, rebuilding both polynomials from the surviving roots.
    RationalTF minreal(double tol = 1e-8) const;

    RationalTF operator-() const { return {-num_, den_}; }

    friend RationalTF operator+(const RationalTF& lhs, const RationalTF& rhs);
    friend RationalTF operator-(const RationalTF& lhs, const RationalTF& rhs);
    friend RationalTF operator*(const RationalTF& lhs, const RationalTF& rhs);
    friend RationalTF operator/(const RationalTF& lhs, const RationalTF& rhs);
    friend RationalTF operator*(const RationalTF& lhs, double k);
    friend RationalTF operator*(double k, const RationalTF& rhs) { return rhs * k; }

    bool operator==(const RationalTF&) const = default;

  private:
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

/// Closed loop g/(1 - sign*g*h); sign -1 is negative feedback. Throws
/// std::domain_error when the resulting denominator is identically zero
/// (algebraic degeneracy).
RationalTF feedback(const RationalTF& g, const RationalTF& h, int sign = -1);

}  // namespace modreg
