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
#include <span>
#include <vector>

namespace wshift {

/// S_0..S_{floor(n/2)} of a list of nonnegative reals (in practice the
/// squared weight moduli). Higher orders vanish and are not stored.
struct CircSymTable {
    std::size_t n = 0;
    std::vector<double> inputs;
    std::vector<double> values;

    /// S_r, zero past the stored range.
    double operator[](std::size_t r) const { return r < values.size() ? values[r] : 0.0; }
};

// Circularly symmetric functions.
//
// S_r(v_1..v_n) sums, over every r-subset of the n-cycle containing no two
// cyclically adjacent positions, the product of the selected inputs. The
// "linear" variant drops the wrap-around constraint (positions 1 and n may
// both be chosen); it equals S_r(v_1..v_n, 0).
//
// Both are evaluated through the independent-set recurrence on a path
//   L_r(v_1..v_k) = L_r(v_1..v_{k-1}) + v_k L_{r-1}(v_1..v_{k-2})
// and the cyclic value splits on whether position 1 is used:
//   S_r(v) = L_r(v_2..v_n) + v_1 L_{r-1}(v_3..v_{n-1}).
//
// On a 2-cycle the two positions are adjacent to each other, so S_2 = 0; on
// a 1-cycle the single position is adjacent to itself and only S_0 survives.

/// Throws ErrorKind::Domain for r < 0.
double circ_sym(std::span<const double> inputs, int r);

/// Throws ErrorKind::Domain for r < 0.
double linear_sym(std::span<const double> inputs, int r);

/// Whole table in O(n^2). Requires at least 2 inputs.
CircSymTable circ_sym_table(std::span<const double> inputs);

/// Exhaustive enumeration of all r-subsets; n <= 24 (ErrorKind::Size).
double circ_sym_bruteforce(std::span<const double> inputs, int r);

/// Linear values L_0..L_{ceil(n/2)} for the full list.
std::vector<double> linear_sym_table(std::span<const double> inputs);

}  // namespace wshift
