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

#include "wshift/reducibility.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wshift/equivalence.hpp"
#include "wshift/error.hpp"
#include "wshift/linalg.hpp"

namespace wshift {

const char *reduce_reason_name(ReduceReason reason) noexcept {
    switch (reason) {
        case ReduceReason::TwoOrMoreZeros:
            return "TwoOrMoreZeros";
        case ReduceReason::PeriodicWeights:
            return "PeriodicWeights";
        case ReduceReason::Irreducible:
            return "Irreducible";
    }
    return "unknown";
}

std::optional<std::size_t> minimal_period(const WeightedShift &ws, double tol) {
    const std::size_t n = ws.size();
    for (std::size_t k = 1; k <= n / 2; ++k) {
        if (n % k != 0) continue;
        bool periodic = true;
        for (std::size_t j = 1; j + k <= n && periodic; ++j) {
            const auto jj = static_cast<std::int64_t>(j);
            periodic = std::abs(ws.modulus(jj) - ws.modulus(jj + static_cast<std::int64_t>(k))) <= tol;
        }
        if (periodic) return k;
    }
    return std::nullopt;
}

DecompositionReport is_reducible(const WeightedShift &ws, double tol) {
    DecompositionReport report;
    if (zero_positions(ws, tol).size() >= 2) {
        report.reducible = true;
        report.reason = ReduceReason::TwoOrMoreZeros;
        return report;
    }
    // A single zero weight makes the shift irreducible, and any period would
    // replicate that zero.
    if (auto k = minimal_period(ws, tol)) {
        report.reducible = true;
        report.reason = ReduceReason::PeriodicWeights;
        report.period_k = k;
    }
    return report;
}

ComplexMatrix fourier_block_unitary(std::size_t n, std::size_t k) {
    if (k < 1 || k > n / 2 || n % k != 0) {
        throw Error(ErrorKind::Domain, "fourier_block_unitary: k = " + std::to_string(k) +
                                           " is not a proper divisor of n = " + std::to_string(n));
    }
    const std::size_t m = n / k;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    // omega^e for integer e, reduced mod n to keep the angle small.
    auto omega_pow = [n](std::size_t e) {
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e % n) / static_cast<double>(n));
    };

    ComplexMatrix u(n);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < m; ++t) {
            // Block (s, t): omega^{t s k} V_t, with V_0 = I.
            for (std::size_t i = 0; i < k; ++i) u(s * k + i, t * k + i) = scale * omega_pow(t * s * k + i * t);
        }
    }
    return u;
}

namespace {

DecompositionReport decompose_zero_split(const WeightedShift &ws, double tol) {
    DecompositionReport report;
    report.reducible = true;
    report.reason = ReduceReason::TwoOrMoreZeros;

    auto split = split_at_zeros(ws, tol);
    auto u = witness_permutation_unitary(ws.size(), split.rotation);
    for (const auto &b : split.blocks) report.summands.push_back(to_matrix(b));
    const auto target = ComplexMatrix::direct_sum(report.summands);
    report.block_residual = max_abs_diff(mat_mul(mat_mul(adjoint(u), to_matrix(ws)), u), target);
    report.unitary = std::move(u);
    report.blocks = std::move(split.blocks);
    return report;
}

DecompositionReport decompose_periodic(const WeightedShift &ws, std::size_t k) {
    const std::size_t n = ws.size();
    const std::size_t m = n / k;

    DecompositionReport report;
    report.reducible = true;
    report.reason = ReduceReason::PeriodicWeights;
    report.period_k = k;
    report.scalar_summands = (k == 1);

    const auto profile = phase_normalize(ws);
    const double theta = profile.phase;
    report.theta = theta;

    std::vector<Complex> base(profile.moduli.begin(), profile.moduli.begin() + static_cast<std::ptrdiff_t>(k));
    report.base_block = WeightedShift::make_block(base);

    // D* A D = e^{i theta} |A| with the chain d_{j+1} = d_j e^{i theta} |a_j| / a_j.
    const Complex rot = std::polar(1.0, theta);
    std::vector<Complex> d(n, Complex(1.0));
    auto w = ws.weights();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const Complex ratio = rot * std::abs(w[j]) / w[j];
        d[j + 1] = d[j] * (ratio / std::abs(ratio));
    }
    auto u = mat_mul(ComplexMatrix::diagonal(d), fourier_block_unitary(n, k));

    const auto b = to_matrix(*report.base_block);
    for (std::size_t s = 0; s < m; ++s) {
        const Complex factor =
            rot * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(n));
        report.summands.push_back(factor * b);
    }
    const auto target = ComplexMatrix::direct_sum(report.summands);
    report.block_residual = max_abs_diff(mat_mul(mat_mul(adjoint(u), to_matrix(ws)), u), target);
    report.unitary = std::move(u);
    return report;
}

}  // namespace

DecompositionReport decompose(const WeightedShift &ws, double tol) {
    const auto decision = is_reducible(ws, tol);
    switch (decision.reason) {
        case ReduceReason::TwoOrMoreZeros:
            return decompose_zero_split(ws, tol);
        case ReduceReason::PeriodicWeights:
            return decompose_periodic(ws, *decision.period_k);
        case ReduceReason::Irreducible:
            break;
    }
    throw Error(ErrorKind::Regime, "decompose: shift is irreducible");
}

}  // namespace wshift
