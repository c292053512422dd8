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

#include "wshift/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wshift/error.hpp"
#include "wshift/linalg.hpp"

namespace wshift {

const char *regime_name(Regime regime) noexcept {
    switch (regime) {
        case Regime::NoZeros:
            return "NoZeros";
        case Regime::OneZero:
            return "OneZero";
        case Regime::TwoZeros:
            return "TwoZeros";
        case Regime::ManyZeros:
            return "ManyZeros";
    }
    return "unknown";
}

namespace {

void require_same_size(const WeightedShift &a, const WeightedShift &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::Dimension, "shifts differ in size: " + std::to_string(a.size()) +
                                              " vs " + std::to_string(b.size()));
    }
}

Complex unit(Complex z) {
    const double m = std::abs(z);
    return m == 0.0 ? Complex(1.0) : z / m;
}

// Diagonal entries d with conj(d_j) a_j d_{j+1} = rot * b_j (indices cyclic).
// Links through a zero weight are unconstrained; the walk starts right after
// one when present so the only closing condition falls on a free link.
std::vector<Complex> diagonal_chain(std::span<const Complex> a, std::span<const Complex> b,
                                    Complex rot, double tol) {
    const std::size_t n = a.size();
    std::size_t start = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(a[j]) <= tol) {
            start = (j + 1) % n;
            break;
        }
    }
    std::vector<Complex> d(n, Complex(1.0));
    for (std::size_t step = 0; step + 1 < n; ++step) {
        const std::size_t j = (start + step) % n;
        const std::size_t next = (j + 1) % n;
        if (std::abs(a[j]) <= tol) {
            d[next] = 1.0;
        } else {
            d[next] = d[j] * unit(rot * b[j] / a[j]);
        }
    }
    return d;
}

ComplexMatrix diagonal_of(const std::vector<Complex> &d) { return ComplexMatrix::diagonal(d); }

double residual(const WeightedShift &a, const WeightedShift &b, const ComplexMatrix &u) {
    return max_abs_diff(mat_mul(to_matrix(a), u), mat_mul(u, to_matrix(b)));
}

bool products_match(const WeightedShift &a, const WeightedShift &b, double tol) {
    const Complex pa = a.product();
    const Complex pb = b.product();
    return std::abs(pa - pb) <= tol * std::max(1.0, std::abs(pa));
}

bool moduli_match(std::span<const Complex> a, std::span<const Complex> b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(std::abs(a[i]) - std::abs(b[i])) > tol) return false;
    return true;
}

// Lexicographic order on (size, moduli).
bool block_less(const WeightedShift &x, const WeightedShift &y) {
    if (x.size() != y.size()) return x.size() < y.size();
    auto wx = x.weights();
    auto wy = y.weights();
    for (std::size_t i = 0; i < wx.size(); ++i) {
        const double mx = std::abs(wx[i]);
        const double my = std::abs(wy[i]);
        if (mx != my) return mx < my;
    }
    return false;
}

std::vector<std::size_t> sorted_order(const std::vector<WeightedShift> &blocks) {
    std::vector<std::size_t> idx(blocks.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return block_less(blocks[i], blocks[j]); });
    return idx;
}

std::vector<std::size_t> block_offsets(const ZeroBlockDecomposition &d) {
    std::vector<std::size_t> off(d.blocks.size(), 0);
    for (std::size_t i = 1; i < off.size(); ++i) off[i] = off[i - 1] + d.sizes[i - 1];
    return off;
}

ComplexMatrix block_witness(std::size_t n, const ZeroBlockDecomposition &da,
                            const ZeroBlockDecomposition &db, const std::vector<std::size_t> &tau) {
    const auto off_a = block_offsets(da);
    const auto off_b = block_offsets(db);
    ComplexMatrix w(n);
    for (std::size_t i = 0; i < db.blocks.size(); ++i) {
        const std::size_t ai = tau[i] - 1;
        const auto &ba = da.blocks[ai].weights();
        const auto &bb = db.blocks[i].weights();
        // Each block ends in its zero, so the chain needs no closing link.
        Complex d = 1.0;
        for (std::size_t t = 0; t < bb.size(); ++t) {
            w(off_a[ai] + t, off_b[i] + t) = d;
            if (t + 1 < bb.size()) d *= unit(bb[t] / ba[t]);
        }
    }
    const auto pa = witness_permutation_unitary(n, da.rotation);
    const auto pb = witness_permutation_unitary(n, db.rotation);
    return mat_mul(mat_mul(pa, w), adjoint(pb));
}

}  // namespace

std::optional<std::size_t> cyclic_modulus_shift(const WeightedShift &a, const WeightedShift &b,
                                                double tol) {
    require_same_size(a, b);
    const std::size_t n = a.size();
    for (std::size_t k = 1; k <= n; ++k) {
        bool ok = true;
        for (std::size_t j = 1; j <= n && ok; ++j) {
            const auto jj = static_cast<std::int64_t>(j);
            ok = std::abs(b.modulus(jj) - a.modulus(static_cast<std::int64_t>(k) + jj)) <= tol;
        }
        if (ok) return k;
    }
    return std::nullopt;
}

ZeroBlockDecomposition split_at_zeros(const WeightedShift &ws, double tol) {
    const auto zeros = zero_positions(ws, tol);
    if (zeros.empty()) throw Error(ErrorKind::Precondition, "split_at_zeros: shift has no zero weight");

    ZeroBlockDecomposition out;
    out.rotation = zeros.back();
    const auto rotated = ws.rotate(static_cast<std::int64_t>(out.rotation));
    std::vector<Complex> current;
    for (auto w : rotated.weights()) {
        if (std::abs(w) <= tol) {
            current.push_back(0.0);
            out.sizes.push_back(current.size());
            out.blocks.push_back(WeightedShift::make_block(std::move(current)));
            current.clear();
        } else {
            current.push_back(w);
        }
    }
    return out;
}

ComplexMatrix witness_permutation_unitary(std::size_t n, std::size_t k) {
    if (n == 0 || k < 1 || k > n) {
        throw Error(ErrorKind::Domain, "witness_permutation_unitary: k must lie in 1.." +
                                           std::to_string(n) + ", got " + std::to_string(k));
    }
    ComplexMatrix p(n);
    for (std::size_t j = 0; j < n; ++j) p((j + k) % n, j) = 1.0;
    return p;
}

double diagonal_witness_phase(const WeightedShift &a, const WeightedShift &b) {
    require_same_size(a, b);
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        sum += arg_positive(a.weights()[j]) - arg_positive(b.weights()[j]);
    return sum / static_cast<double>(a.size());
}

ComplexMatrix witness_diagonal_unitary(const WeightedShift &a, const WeightedShift &b) {
    require_same_size(a, b);
    if (!moduli_match(a.weights(), b.weights(), kDefaultTol))
        throw Error(ErrorKind::Precondition, "witness_diagonal_unitary: moduli differ");
    if (!zero_positions(a).empty() || !zero_positions(b).empty())
        throw Error(ErrorKind::Precondition, "witness_diagonal_unitary: zero weight present");
    const Complex rot = std::polar(1.0, diagonal_witness_phase(a, b));
    return diagonal_of(diagonal_chain(a.weights(), b.weights(), rot, kDefaultTol));
}

EquivalenceReport check_equivalent(const WeightedShift &a, const WeightedShift &b, double tol,
                                   bool want_witness) {
    require_same_size(a, b);
    const std::size_t n = a.size();
    const std::size_t za = zero_positions(a, tol).size();

    EquivalenceReport report;
    report.outside_proven_range = n < 3;
    report.regime = za == 0 ? Regime::NoZeros
                  : za == 1 ? Regime::OneZero
                  : za == 2 ? Regime::TwoZeros
                            : Regime::ManyZeros;

    if (report.regime != Regime::ManyZeros) {
        const auto k = cyclic_modulus_shift(a, b, tol);
        if (k) report.shift_k = k;
        report.equivalent = k.has_value() && products_match(a, b, tol);
        if (report.equivalent && want_witness) {
            const auto rotated = a.rotate(static_cast<std::int64_t>(*k));
            const auto d = diagonal_chain(rotated.weights(), b.weights(), 1.0, tol);
            auto u = mat_mul(witness_permutation_unitary(n, *k), diagonal_of(d));
            report.witness_residual = residual(a, b, u);
            report.witness = std::move(u);
        }
        return report;
    }

    // Unitary equivalence preserves the number of zero singular values.
    if (zero_positions(b, tol).size() != za) return report;

    const auto da = split_at_zeros(a, tol);
    const auto db = split_at_zeros(b, tol);
    if (da.blocks.size() != db.blocks.size()) return report;

    const auto order_a = sorted_order(da.blocks);
    const auto order_b = sorted_order(db.blocks);
    std::vector<std::size_t> tau(db.blocks.size());
    for (std::size_t i = 0; i < order_a.size(); ++i) {
        const auto &x = da.blocks[order_a[i]];
        const auto &y = db.blocks[order_b[i]];
        if (x.size() != y.size() || !moduli_match(x.weights(), y.weights(), tol)) return report;
        tau[order_b[i]] = order_a[i] + 1;
    }
    report.equivalent = true;
    if (want_witness) {
        auto u = block_witness(a.size(), da, db, tau);
        report.witness_residual = residual(a, b, u);
        report.witness = std::move(u);
    }
    report.block_matching = std::move(tau);
    return report;
}

}  // namespace wshift
