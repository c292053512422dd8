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

#include "wshift/circsym.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "wshift/error.hpp"

namespace wshift {

namespace {

constexpr std::size_t kCompensateAbove = 64;

void require_order(int r) {
    if (r < 0) throw Error(ErrorKind::Domain, "order r must be nonnegative, got " + std::to_string(r));
}

// Value carried with a running compensation term (Neumaier).
struct Acc {
    double hi = 0.0;
    double lo = 0.0;
    double value() const { return hi + lo; }
};

Acc add(Acc a, double term, bool compensate) {
    if (!compensate) return {a.hi + term, 0.0};
    const double s = a.hi + term;
    const double err = std::abs(a.hi) >= std::abs(term) ? (a.hi - s) + term : (term - s) + a.hi;
    return {s, a.lo + err};
}

// L_0..L_max_r over the path v, by increasing prefix length.
std::vector<double> path_table(std::span<const double> v, std::size_t max_r) {
    const bool compensate = v.size() > kCompensateAbove;
    std::vector<Acc> two_back(max_r + 1), one_back(max_r + 1), cur(max_r + 1);
    two_back[0].hi = 1.0;  // empty prefix
    one_back[0].hi = 1.0;
    if (!v.empty() && max_r >= 1) one_back[1].hi = v[0];

    for (std::size_t k = 1; k < v.size(); ++k) {
        cur[0] = {1.0, 0.0};
        for (std::size_t r = 1; r <= max_r; ++r)
            cur[r] = add(one_back[r], v[k] * two_back[r - 1].value(), compensate);
        std::swap(two_back, one_back);
        std::swap(one_back, cur);
    }
    std::vector<double> out(max_r + 1);
    for (std::size_t r = 0; r <= max_r; ++r) out[r] = v.empty() ? (r == 0 ? 1.0 : 0.0) : one_back[r].value();
    return out;
}

// S_0..S_top on the cycle v. Splitting on whether position 1 is chosen,
//   S_r(v) = L_r(v_2..v_n) + v_1 L_{r-1}(v_3..v_{n-1}),
// keeps every term nonnegative, so nothing cancels.
std::vector<double> cyclic_table(std::span<const double> v, std::size_t top) {
    const std::size_t n = v.size();
    std::vector<double> out(top + 1, 0.0);
    out[0] = 1.0;
    if (top == 0 || n < 2) return out;
    if (n == 2) {
        out[1] = v[0] + v[1];
        return out;
    }
    const auto rest = path_table(v.subspan(1), top);
    const auto mid = path_table(v.subspan(2, n - 3), top - 1);
    for (std::size_t r = 1; r <= top; ++r) out[r] = rest[r] + v[0] * mid[r - 1];
    return out;
}

}  // namespace

std::vector<double> linear_sym_table(std::span<const double> inputs) {
    return path_table(inputs, (inputs.size() + 1) / 2);
}

double linear_sym(std::span<const double> inputs, int r) {
    require_order(r);
    const auto max_r = (inputs.size() + 1) / 2;
    if (static_cast<std::size_t>(r) > max_r) return 0.0;
    return path_table(inputs, static_cast<std::size_t>(r))[static_cast<std::size_t>(r)];
}

double circ_sym(std::span<const double> inputs, int r) {
    require_order(r);
    const std::size_t n = inputs.size();
    const auto rr = static_cast<std::size_t>(r);
    if (rr == 0) return 1.0;
    if (rr > n / 2) return 0.0;
    return cyclic_table(inputs, rr)[rr];
}

CircSymTable circ_sym_table(std::span<const double> inputs) {
    if (inputs.size() < 2)
        throw Error(ErrorKind::Dimension, "circ_sym_table needs at least 2 inputs");
    const std::size_t n = inputs.size();
    const std::size_t top = n / 2;

    CircSymTable table;
    table.n = n;
    table.inputs.assign(inputs.begin(), inputs.end());
    table.values = cyclic_table(inputs, top);
    return table;
}

double circ_sym_bruteforce(std::span<const double> inputs, int r) {
    require_order(r);
    const std::size_t n = inputs.size();
    if (n > 24) throw Error(ErrorKind::Size, "circ_sym_bruteforce supports n <= 24, got " + std::to_string(n));
    if (r == 0) return 1.0;
    if (static_cast<std::size_t>(r) > n) return 0.0;

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    auto rotl = [&](std::uint32_t m) { return ((m << 1) | (m >> (n - 1))) & full; };

    double total = 0.0;
    // Gosper's hack walks all masks with popcount r in increasing order.
    std::uint32_t mask = (1u << r) - 1u;
    while (mask <= full) {
        if ((mask & rotl(mask)) == 0) {
            double prod = 1.0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) prod *= inputs[i];
            total += prod;
        }
        const std::uint32_t low = mask & (~mask + 1u);
        const std::uint32_t ripple = mask + low;
        if (ripple == 0) break;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    return total;
}

}  // namespace wshift
