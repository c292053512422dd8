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

#include "wshift/core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wshift/error.hpp"

namespace wshift {

const char *error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Dimension:
            return "dimension";
        case ErrorKind::Validation:
            return "validation";
        case ErrorKind::Domain:
            return "domain";
        case ErrorKind::Contract:
            return "contract";
        case ErrorKind::Convergence:
            return "convergence";
        case ErrorKind::Precondition:
            return "precondition";
        case ErrorKind::Size:
            return "size";
        case ErrorKind::Regime:
            return "regime";
    }
    return "unknown";
}

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> values, const char *what) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!is_finite(values[i])) {
            throw Error(ErrorKind::Validation,
                        std::string(what) + ": entry " + std::to_string(i + 1) + " is not finite");
        }
    }
}

std::size_t wrap_index(std::int64_t j, std::size_t n) {
    auto m = static_cast<std::int64_t>(n);
    auto r = (j - 1) % m;
    if (r < 0) r += m;
    return static_cast<std::size_t>(r);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw Error(ErrorKind::Dimension, "matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) throw Error(ErrorKind::Dimension, "matrix dimension must be positive");
    if (data_.size() != dim * dim) {
        throw Error(ErrorKind::Dimension, "matrix needs " + std::to_string(dim * dim) +
                                              " entries, got " + std::to_string(data_.size()));
    }
    require_finite(data_, "matrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::direct_sum(std::span<const ComplexMatrix> blocks) {
    std::size_t total = 0;
    for (const auto &b : blocks) total += b.dim();
    ComplexMatrix m(total);
    std::size_t offset = 0;
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) m(offset + i, offset + j) = b(i, j);
        offset += b.dim();
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) throw Error(ErrorKind::Dimension, "matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_)
        throw Error(ErrorKind::Dimension, "matrix difference: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &x : data_) x *= scale;
    return *this;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::Dimension, "max_abs_diff: dimension mismatch");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

double frobenius_norm(const ComplexMatrix &m) {
    double sum = 0.0;
    for (auto x : m.entries()) sum += std::norm(x);
    return std::sqrt(sum);
}

WeightedShift WeightedShift::make(std::vector<Complex> weights) {
    if (weights.size() < 2) {
        throw Error(ErrorKind::Dimension, "weighted shift needs at least 2 weights, got " +
                                              std::to_string(weights.size()));
    }
    require_finite(weights, "weight");
    return WeightedShift(std::move(weights));
}

WeightedShift WeightedShift::make_block(std::vector<Complex> weights) {
    if (weights.empty()) throw Error(ErrorKind::Dimension, "shift block must be non-empty");
    require_finite(weights, "weight");
    return WeightedShift(std::move(weights));
}

Complex WeightedShift::weight(std::int64_t j) const { return weights_[wrap_index(j, size())]; }

WeightedShift WeightedShift::rotate(std::int64_t k) const {
    std::vector<Complex> out(size());
    for (std::size_t j = 1; j <= size(); ++j)
        out[j - 1] = weight(k + static_cast<std::int64_t>(j));
    return WeightedShift(std::move(out));
}

WeightedShift WeightedShift::reversed() const {
    return WeightedShift(std::vector<Complex>(weights_.rbegin(), weights_.rend()));
}

WeightedShift WeightedShift::conjugated() const {
    std::vector<Complex> out(weights_);
    for (auto &w : out) w = std::conj(w);
    return WeightedShift(std::move(out));
}

Complex WeightedShift::product() const {
    Complex p = 1.0;
    for (auto w : weights_) p *= w;
    return p;
}

double arg_positive(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    // arg of a value just below the positive real axis can round up to 2*pi.
    if (a >= 2.0 * std::numbers::pi) a = 0.0;
    return a;
}

ModulusProfile phase_normalize(const WeightedShift &ws) {
    ModulusProfile profile;
    profile.moduli.reserve(ws.size());
    bool has_zero = false;
    double arg_sum = 0.0;
    for (auto w : ws.weights()) {
        double m = std::abs(w);
        profile.moduli.push_back(m);
        if (m <= kDefaultTol) {
            has_zero = true;
        } else {
            arg_sum += arg_positive(w);
        }
    }
    profile.phase = has_zero ? 0.0 : arg_sum / static_cast<double>(ws.size());
    profile.product = ws.product();
    return profile;
}

ComplexMatrix to_matrix(const WeightedShift &ws) {
    const std::size_t n = ws.size();
    ComplexMatrix m(n);
    auto w = ws.weights();
    if (n == 1) {
        m(0, 0) = w[0];
        return m;
    }
    for (std::size_t j = 0; j + 1 < n; ++j) m(j, j + 1) = w[j];
    m(n - 1, 0) = w[n - 1];
    return m;
}

std::vector<std::size_t> zero_positions(const WeightedShift &ws, double tol) {
    std::vector<std::size_t> out;
    auto w = ws.weights();
    for (std::size_t j = 0; j < w.size(); ++j)
        if (std::abs(w[j]) <= tol) out.push_back(j + 1);
    return out;
}

}  // namespace wshift
