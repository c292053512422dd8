// Copyright 2026 The wshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "wshift/circsym.hpp"
#include "wshift/core.hpp"

namespace wshift {

/// Closed form of p(x, y, z) = det(x Re A + y Im A + z I) for a weighted
/// shift of size n >= 3:
///
///   p = z^n + sum_{r=1}^{n/2} c_r (x^2 + y^2)^r z^{n-2r}
///         + (-1)^{n+1} 2^{-n} ((x - iy)^n w + (x + iy)^n conj(w))
///
/// with c_r = S_r(|a_1|^2, ..., |a_n|^2) (-1/4)^r and w = a_1 ... a_n.
struct KippenhahnPoly {
    std::size_t n = 0;
    /// S_0..S_{n/2} of the squared moduli.
    CircSymTable s_table;
    /// c_1..c_{n/2}; radial[r - 1] multiplies (x^2 + y^2)^r z^{n-2r}.
    std::vector<double> radial;
    Complex product_term;
};

/// ErrorKind::Domain for n < 3.
KippenhahnPoly kippenhahn_poly(const WeightedShift &ws);

double eval_kippenhahn(const KippenhahnPoly &p, double x, double y, double z);

/// det(x Re A + y Im A + z I) evaluated by LU on the dense matrix. The
/// determinant of a Hermitian matrix is real; an imaginary part above
/// 1e-10 of the Hadamard bound raises ErrorKind::Contract.
double kippenhahn_oracle(const WeightedShift &ws, double x, double y, double z);

}  // namespace wshift
