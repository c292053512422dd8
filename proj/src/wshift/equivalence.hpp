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

enum class Regime { NoZeros, OneZero, TwoZeros, ManyZeros };

const char *regime_name(Regime regime) noexcept;

struct EquivalenceReport {
    bool equivalent = false;
    Regime regime = Regime::NoZeros;
    /// Offset k in 1..n with |b_j| = |a_{k+j}| (k = n is the identity offset).
    std::optional<std::size_t> shift_k;
    /// block_matching[i] = tau(i+1): the 1-based block of `a` matched with
    /// block i+1 of `b`, so that |B| is the direct sum of |A_tau(i)|.
    std::optional<std::vector<std::size_t>> block_matching;
    /// Unitary U with A U = U B.
    std::optional<ComplexMatrix> witness;
    /// |A U - U B|_max.
    std::optional<double> witness_residual;
    /// n = 2 is decided by the same criterion but lies below the proven range.
    bool outside_proven_range = false;
};

/// Result of cutting a shift with zero weights into its direct summands.
struct ZeroBlockDecomposition {
    /// The input was rotated by this offset (1..n) first, so that a_n = 0.
    std::size_t rotation = 0;
    /// Each block ends in its single zero weight (stored as exact 0).
    std::vector<WeightedShift> blocks;
    std::vector<std::size_t> sizes;
};

/// Smallest k in 1..n with max_j | |b_j| - |a_{k+j}| | <= tol, i.e. b is a
/// k-rotation of a up to moduli.
std::optional<std::size_t> cyclic_modulus_shift(const WeightedShift &a, const WeightedShift &b,
                                                double tol = kDefaultTol);

/// ErrorKind::Precondition when no weight is zero within tol.
ZeroBlockDecomposition split_at_zeros(const WeightedShift &ws, double tol = kDefaultTol);

EquivalenceReport check_equivalent(const WeightedShift &a, const WeightedShift &b,
                                   double tol = kDefaultTol, bool want_witness = false);

/// Permutation P sending e_j to e_{j+k}, so that P* A P has weights a_{k+j}.
/// 1 <= k <= n.
ComplexMatrix witness_permutation_unitary(std::size_t n, std::size_t k);

/// Diagonal unitary D with D* A D = e^{i psi_0} B, where
/// psi_0 = sum_j (arg a_j - arg b_j) / n. Requires |a_j| = |b_j| for all j
/// and no zero weights (ErrorKind::Precondition).
ComplexMatrix witness_diagonal_unitary(const WeightedShift &a, const WeightedShift &b);

/// Phase psi_0 used by witness_diagonal_unitary.
double diagonal_witness_phase(const WeightedShift &a, const WeightedShift &b);

}  // namespace wshift
