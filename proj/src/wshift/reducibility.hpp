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
#include <optional>
#include <vector>

#include "wshift/core.hpp"

namespace wshift {

enum class ReduceReason { TwoOrMoreZeros, PeriodicWeights, Irreducible };

const char *reduce_reason_name(ReduceReason reason) noexcept;

struct DecompositionReport {
    bool reducible = false;
    ReduceReason reason = ReduceReason::Irreducible;
    /// Minimal period: k | n, 1 <= k <= n/2, |a_j| = |a_{j+k}|.
    std::optional<std::size_t> period_k;
    /// (sum_j arg a_j) / n.
    std::optional<double> theta;
    /// k-by-k shift with weights |a_1|..|a_k|.
    std::optional<WeightedShift> base_block;
    /// U with U* A U equal to the direct sum of `summands`.
    std::optional<ComplexMatrix> unitary;
    /// Periodic case: e^{i theta} omega^s B for s = 0..n/k-1, omega = e^{2 pi i/n}.
    /// Zero-split case: the realized zero-terminated blocks.
    std::vector<ComplexMatrix> summands;
    /// Zero-split case: the blocks as shifts.
    std::vector<WeightedShift> blocks;
    /// |U* A U - (direct sum of summands)|_max.
    std::optional<double> block_residual;
    /// k = 1: the summands are the scalar eigenvalues of A.
    bool scalar_summands = false;
};

std::optional<std::size_t> minimal_period(const WeightedShift &ws, double tol = kDefaultTol);

/// Decision only: reducible iff at least two zero weights or periodic moduli.
DecompositionReport is_reducible(const WeightedShift &ws, double tol = kDefaultTol);

/// The n-by-n block Fourier unitary for period k (k | n, 1 <= k <= n/2):
/// block (s, t) is omega^{(t-1)(s-1)k} V_{t-1} / sqrt(m), m = n/k,
/// V_j = diag(1, omega^j, ..., omega^{(k-1)j}), omega = e^{2 pi i/n}.
ComplexMatrix fourier_block_unitary(std::size_t n, std::size_t k);

/// Decision plus certificate. ErrorKind::Regime for irreducible input.
DecompositionReport decompose(const WeightedShift &ws, double tol = kDefaultTol);

}  // namespace wshift
