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

#include "wshift/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wshift/error.hpp"

namespace wshift {

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::Dimension, "mat_mul: " + std::to_string(a.dim()) + " vs " +
                                              std::to_string(b.dim()));
    }
    const std::size_t n = a.dim();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) { return 0.5 * (m + adjoint(m)); }

ComplexMatrix skew_hermitian_part(const ComplexMatrix &m) {
    return Complex(0.0, -0.5) * (m - adjoint(m));
}

Complex det_complex(const ComplexMatrix &m) {
    const std::size_t n = m.dim();
    std::vector<Complex> lu(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> Complex & { return lu[i * n + j]; };

    // Row scale factors for scaled pivoting.
    std::vector<double> scale(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) scale[i] = std::max(scale[i], std::abs(at(i, j)));
        if (scale[i] == 0.0) return 0.0;
    }

    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = -1.0;
        for (std::size_t i = k; i < n; ++i) {
            double ratio = std::abs(at(i, k)) / scale[i];
            if (ratio > best) {
                best = ratio;
                pivot = i;
            }
        }
        if (at(pivot, k) == Complex{}) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            std::swap(scale[k], scale[pivot]);
            det = -det;
        }
        const Complex piv = at(k, k);
        det *= piv;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = at(i, k) / piv;
            if (factor == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
        }
    }
    return det;
}

namespace {

double off_diagonal_norm(const ComplexMatrix &h) {
    double sum = 0.0;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            if (i != j) sum += std::norm(h(i, j));
    return std::sqrt(sum);
}

// One two-sided rotation zeroing h(p, q). The 2x2 transform is
//   V = [[c, s], [-s e^{-i phi}, c e^{-i phi}]],  h(p, q) = |h(p, q)| e^{i phi},
// i.e. a phase fix making the pivot real followed by a real Jacobi rotation.
void rotate(ComplexMatrix &h, std::size_t p, std::size_t q, ComplexMatrix *vectors) {
    const Complex g = h(p, q);
    const double mag = std::abs(g);
    if (mag == 0.0) return;
    const Complex phase = std::conj(g) / mag;  // e^{-i phi}

    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex v00 = c, v01 = s, v10 = -s * phase, v11 = c * phase;
    const std::size_t n = h.dim();

    // H <- H V
    for (std::size_t k = 0; k < n; ++k) {
        const Complex hkp = h(k, p), hkq = h(k, q);
        h(k, p) = hkp * v00 + hkq * v10;
        h(k, q) = hkp * v01 + hkq * v11;
    }
    // H <- V* H
    for (std::size_t k = 0; k < n; ++k) {
        const Complex hpk = h(p, k), hqk = h(q, k);
        h(p, k) = std::conj(v00) * hpk + std::conj(v10) * hqk;
        h(q, k) = std::conj(v01) * hpk + std::conj(v11) * hqk;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = h(p, p).real();
    h(q, q) = h(q, q).real();

    if (vectors != nullptr) {
        auto &v = *vectors;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp * v00 + vkq * v10;
            v(k, q) = vkp * v01 + vkq * v11;
        }
    }
}

}  // namespace

EigenResult hermitian_eigenvalues(const ComplexMatrix &h_in, bool want_vectors) {
    constexpr int kMaxSweeps = 100;
    const std::size_t n = h_in.dim();
    const double norm = frobenius_norm(h_in);

    const double asym = frobenius_norm(h_in - adjoint(h_in));
    if (asym > 1e-10 * norm) {
        throw Error(ErrorKind::Contract, "hermitian_eigenvalues: input is not Hermitian (|H - H*|_F = " +
                                             std::to_string(asym) + ")");
    }

    // Work on the exactly Hermitian average so rotations keep the symmetry.
    ComplexMatrix h = hermitian_part(h_in);
    std::optional<ComplexMatrix> vectors;
    if (want_vectors) vectors = ComplexMatrix::identity(n);

    const double target = 1e-12 * norm;
    double off = off_diagonal_norm(h);
    int sweep = 0;
    while (off > target) {
        if (sweep == kMaxSweeps) {
            throw Error(ErrorKind::Convergence,
                        "hermitian_eigenvalues: no convergence after " + std::to_string(kMaxSweeps) +
                            " sweeps",
                        off);
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(h, p, q, vectors ? &*vectors : nullptr);
        off = off_diagonal_norm(h);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return h(a, a).real() < h(b, b).real(); });

    EigenResult result;
    result.values.reserve(n);
    for (auto i : order) result.values.push_back(h(i, i).real());

    if (!want_vectors) {
        result.residual = off;
        return result;
    }

    ComplexMatrix sorted(n);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) sorted(row, col) = (*vectors)(row, order[col]);

    double worst = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += h_in(i, k) * sorted(k, col);
            sum += std::norm(acc - result.values[col] * sorted(i, col));
        }
        worst = std::max(worst, std::sqrt(sum));
    }
    result.residual = worst;
    result.vectors = std::move(sorted);
    return result;
}

bool is_unitary(const ComplexMatrix &u, double tol) {
    return max_abs_diff(mat_mul(adjoint(u), u), ComplexMatrix::identity(u.dim())) <= tol;
}

}  // namespace wshift
