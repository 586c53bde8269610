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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modreg {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("Polynomial: coefficient sequence must be non-empty");
    }
    trim();
}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

Polynomial Polynomial::from_roots(std::span<const std::complex<double>> roots,
                                  double leading) {
    std::vector<std::complex<double>> c{1.0};
    for (const auto& root : roots) {
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * root;
        }
        c = std::move(next);
    }
    std::vector<double> real(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        real[i] = c[i].real() * leading;
    }
    return Polynomial(std::move(real));
}

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * s + *it;
    }
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * s + *it;
    }
    return acc;
}

int Polynomial::trailing_zero_multiplicity(double tol) const {
    if (is_zero()) {
        throw std::domain_error("trailing_zero_multiplicity: zero polynomial");
    }
    double max_mag = 0.0;
    for (double c : coeffs_) {
        max_mag = std::max(max_mag, std::abs(c));
    }
    const double cutoff = tol * max_mag;
    int count = 0;
    for (double c : coeffs_) {
        if (std::abs(c) > cutoff) {
            break;
        }
        ++count;
    }
    return count;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), 0.0);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), 0.0);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return Polynomial{};
    }
    std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(double k) {
    for (double& c : coeffs_) {
        c *= k;
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator/=(double k) {
    if (k == 0.0) {
        throw std::invalid_argument("Polynomial: division by zero scalar");
    }
    for (double& c : coeffs_) {
        c /= k;
    }
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (double& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

}  // namespace modreg
