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

/// Roots of p with multiplicity, via eigenvalues of the balanced companion
/// matrix (residual target ~1e-10 for moderate-degree well-scaled input).
/// Degree-zero polynomials have no roots. Throws on the zero polynomial.
std::vector<std::complex<double>> roots(const Polynomial& p);

/// True iff every root has strictly negative real part (vacuously true for
/// nonzero constants). Throws on the zero polynomial.
bool is_hurwitz(const Polynomial& p);

}  // namespace modreg
