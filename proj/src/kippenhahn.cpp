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

#include "wshift/kippenhahn.hpp"

#include <cmath>
#include <string>

#include "wshift/error.hpp"
#include "wshift/linalg.hpp"

namespace wshift {

KippenhahnPoly kippenhahn_poly(const WeightedShift &ws) {
    const std::size_t n = ws.size();
    if (n < 3) throw Error(ErrorKind::Domain, "kippenhahn_poly needs n >= 3, got " + std::to_string(n));

    std::vector<double> squared;
    squared.reserve(n);
    for (auto w : ws.weights()) squared.push_back(std::norm(w));

    KippenhahnPoly p;
    p.n = n;
    p.s_table = circ_sym_table(squared);
    double quarter_pow = 1.0;
    for (std::size_t r = 1; r < p.s_table.values.size(); ++r) {
        quarter_pow *= -0.25;
        p.radial.push_back(p.s_table.values[r] * quarter_pow);
    }
    p.product_term = ws.product();
    return p;
}

double eval_kippenhahn(const KippenhahnPoly &p, double x, double y, double z) {
    const std::size_t n = p.n;
    const double rho = x * x + y * y;
    const double z2 = z * z;

    // Horner in z^2:  sum_{r=0}^{R} c_r rho^r z^{2(R-r)}, then times z^{n-2R}.
    const std::size_t top = p.radial.size();
    double acc = 1.0;
    double rho_pow = 1.0;
    for (std::size_t r = 1; r <= top; ++r) {
        rho_pow *= rho;
        acc = acc * z2 + p.radial[r - 1] * rho_pow;
    }
    const double sum = (n - 2 * top == 1) ? acc * z : acc;

    const Complex base(x, -y);
    Complex power = 1.0;
    for (std::size_t i = 0; i < n; ++i) power *= base;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    const double tail = sign * std::ldexp(2.0 * (power * p.product_term).real(), -static_cast<int>(n));
    return sum + tail;
}

double kippenhahn_oracle(const WeightedShift &ws, double x, double y, double z) {
    const auto a = to_matrix(ws);
    auto m = Complex(x) * hermitian_part(a) + Complex(y) * skew_hermitian_part(a);
    m += Complex(z) * ComplexMatrix::identity(ws.size());
    const Complex det = det_complex(m);

    double hadamard = 1.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) row += std::norm(m(i, j));
        hadamard *= std::sqrt(row);
    }
    if (std::abs(det.imag()) > 1e-10 * std::max(1.0, hadamard)) {
        throw Error(ErrorKind::Contract, "kippenhahn_oracle: determinant has imaginary part " +
                                             std::to_string(det.imag()));
    }
    return det.real();
}

}  // namespace wshift
