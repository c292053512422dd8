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

#include "wshift/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "wshift/circsym.hpp"
#include "wshift/error.hpp"
#include "wshift/linalg.hpp"

namespace wshift {

namespace {

constexpr double kSimpleGap = 1e-8;
constexpr std::size_t kAnglesPerWorker = 32;

ComplexMatrix rotated_real_part(const ComplexMatrix &a, double theta) {
    return hermitian_part(std::polar(1.0, -theta) * a);
}

void sample_range(const ComplexMatrix &a, BoundarySamples &out, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
        const auto eig = hermitian_eigenvalues(rotated_real_part(a, out.angles[i]), true);
        const std::size_t n = eig.values.size();
        out.support[i] = eig.values.back();
        if (n == 1 || eig.values[n - 1] - eig.values[n - 2] > kSimpleGap) {
            const auto &v = *eig.vectors;
            Complex quad = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                Complex av = 0.0;
                for (std::size_t c = 0; c < n; ++c) av += a(r, c) * v(c, n - 1);
                quad += std::conj(v(r, n - 1)) * av;
            }
            out.points[i] = quad;
        }
    }
}

}  // namespace

double support_function(const WeightedShift &ws, double theta) {
    return hermitian_eigenvalues(rotated_real_part(to_matrix(ws), theta)).values.back();
}

BoundarySamples boundary_samples(const WeightedShift &ws, std::size_t m) {
    if (m < 3) throw Error(ErrorKind::Domain, "boundary_samples needs m >= 3, got " + std::to_string(m));

    BoundarySamples out;
    out.angles.resize(m);
    out.support.resize(m);
    out.points.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        out.angles[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);

    const auto a = to_matrix(ws);
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, (m + kAnglesPerWorker - 1) / kAnglesPerWorker);
    if (workers <= 1) {
        sample_range(a, out, 0, m);
        return out;
    }

    // Each worker owns a disjoint index range, so writes never overlap.
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (m + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(m, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    sample_range(a, out, begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

double range_scale(const WeightedShift &a, const WeightedShift &b) {
    double biggest = 0.0;
    for (auto w : a.weights()) biggest = std::max(biggest, std::norm(w));
    for (auto w : b.weights()) biggest = std::max(biggest, std::norm(w));
    return std::max(1.0, biggest * static_cast<double>(std::max(a.size(), b.size())));
}

bool ranges_equal(const WeightedShift &a, const WeightedShift &b, double tol) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::Dimension, "ranges_equal: sizes differ (" + std::to_string(a.size()) +
                                              " vs " + std::to_string(b.size()) + ")");
    }
    if (a.size() < 3) throw Error(ErrorKind::Domain, "ranges_equal needs n >= 3");

    const double scale = range_scale(a, b);
    const Complex pa = a.product();
    const Complex pb = b.product();
    if (std::abs(pa - pb) > tol * std::max({scale, std::abs(pa), std::abs(pb)})) return false;

    auto squared = [](const WeightedShift &ws) {
        std::vector<double> out;
        for (auto w : ws.weights()) out.push_back(std::norm(w));
        return out;
    };
    const auto sa = circ_sym_table(squared(a));
    const auto sb = circ_sym_table(squared(b));
    for (std::size_t r = 1; r < sa.values.size(); ++r) {
        const double x = sa.values[r];
        const double y = sb.values[r];
        if (std::abs(x - y) > tol * std::max({scale, x, y})) return false;
    }
    return true;
}

DiscRadius disc_radius(const WeightedShift &ws) {
    if (zero_positions(ws).empty())
        throw Error(ErrorKind::Precondition, "disc_radius: shift has no zero weight");
    DiscRadius out;
    out.radius = support_function(ws, 0.0);
    for (int i = 1; i <= 7; ++i) {
        const double h = support_function(ws, 2.0 * std::numbers::pi * i / 8.0);
        out.max_deviation = std::max(out.max_deviation, std::abs(h - out.radius));
    }
    return out;
}

}  // namespace wshift
