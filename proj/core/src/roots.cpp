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

#include "modreg/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace modreg {

namespace {

// Parlett-Reinsch style diagonal balancing: scale row/column pairs by powers
// of two until the norms stop improving. Keeps eigenvalues exact.
void balance(Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            double row_norm = a.row(i).lpNorm<1>();
            double col_norm = a.col(i).lpNorm<1>();
            if (row_norm == 0.0 || col_norm == 0.0) {
                continue;
            }
            int exponent = 0;
            std::frexp(row_norm / col_norm, &exponent);
            exponent /= 2;
            if (exponent != 0) {
                const double scaled_col = std::ldexp(col_norm, exponent);
                const double scaled_row = std::ldexp(row_norm, -exponent);
                if (scaled_col + scaled_row < 0.95 * (col_norm + row_norm)) {
                    changed = true;
                    a.row(i) *= std::ldexp(1.0, -exponent);
                    a.col(i) *= std::ldexp(1.0, exponent);
                }
            }
        }
    }
}

}  // namespace

std::vector<std::complex<double>> roots(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::domain_error("roots: zero polynomial");
    }
    const auto& c = p.coeffs();
    const int degree = p.degree();
    if (degree == 0) {
        return {};
    }

    // Monic companion matrix with subdiagonal ones; last column carries the
    // normalized coefficients.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) {
        companion(i, i - 1) = 1.0;
    }
    const double lead = c[static_cast<std::size_t>(degree)];
    for (int i = 0; i < degree; ++i) {
        companion(i, degree - 1) = -c[static_cast<std::size_t>(i)] / lead;
    }
    balance(companion);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("roots: eigenvalue iteration failed to converge");
    }

    std::vector<std::complex<double>> out(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    }
    return out;
}

bool is_hurwitz(const Polynomial& p) {
    for (const auto& root : roots(p)) {
        if (root.real() >= 0.0) {
            return false;
        }
    }
    return true;
}

}  // namespace modreg
