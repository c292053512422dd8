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

/// Support function of W(A) sampled on a uniform angle grid.
struct BoundarySamples {
    std::vector<double> angles;
    /// h(theta) = largest eigenvalue of Re(e^{-i theta} A).
    std::vector<double> support;
    /// <A v, v> for the top eigenvector v; empty where the top eigenvalue is
    /// not simple (gap <= 1e-8).
    std::vector<std::optional<Complex>> points;
};

double support_function(const WeightedShift &ws, double theta);

/// m >= 3 angles theta_i = 2 pi i / m. Angles are evaluated on worker
/// threads; the result is always in angle order.
BoundarySamples boundary_samples(const WeightedShift &ws, std::size_t m);

/// max(1, n * max_j |w_j|^2) over both shifts.
double range_scale(const WeightedShift &a, const WeightedShift &b);

/// W(A) == W(B) via equal products and equal S_1..S_{n/2} of the squared
/// moduli. Requires equal sizes n >= 3.
bool ranges_equal(const WeightedShift &a, const WeightedShift &b, double tol = kDefaultTol);

struct DiscRadius {
    double radius = 0.0;
    /// Largest |h(theta) - radius| over the cross-check angles.
    double max_deviation = 0.0;
};

/// With a zero weight W(A) is a disc about the origin; its radius is h(0).
/// ErrorKind::Precondition when no weight is zero.
DiscRadius disc_radius(const WeightedShift &ws);

}  // namespace wshift
