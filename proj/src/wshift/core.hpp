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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wshift {

using Complex = std::complex<double>;

/// Library-wide default for deciding that a weight modulus is zero, and for
/// comparing moduli against each other.
inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major. Entries must be finite.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// Block-diagonal direct sum, blocks placed top-left to bottom-right.
    static ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);

    std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &m);

/// The weights a_1..a_n of an n-by-n weighted shift: a_j sits at (j, j+1)
/// for j < n and a_n sits in the lower-left corner. Index j is 1-based and
/// cyclic, so weight(n + j) == weight(j) == weight(j - n).
class WeightedShift {
   public:
    /// Validated construction; n >= 2 and every entry finite.
    static WeightedShift make(std::vector<Complex> weights);

    /// Block components of a zero-split may be 1-by-1 (the scalar zero
    /// matrix). Entries must still be finite.
    static WeightedShift make_block(std::vector<Complex> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const Complex> weights() const noexcept { return weights_; }

    Complex weight(std::int64_t j) const;
    double modulus(std::int64_t j) const { return std::abs(weight(j)); }

    /// b_j = a_{k+j} for all j.
    WeightedShift rotate(std::int64_t k) const;

    /// b_j = a_{n+1-j}.
    WeightedShift reversed() const;

    /// Weights conjugated entrywise.
    WeightedShift conjugated() const;

    Complex product() const;

    bool operator==(const WeightedShift &other) const = default;

   private:
    explicit WeightedShift(std::vector<Complex> weights) : weights_(std::move(weights)) {}
    std::vector<Complex> weights_;
};

inline WeightedShift make_shift(std::vector<Complex> weights) {
    return WeightedShift::make(std::move(weights));
}

inline WeightedShift rotate(const WeightedShift &ws, std::int64_t k) { return ws.rotate(k); }

/// Unitary-invariant shape of a shift: moduli, common phase and product.
struct ModulusProfile {
    std::vector<double> moduli;
    /// (sum_j arg a_j) / n with each arg in [0, 2*pi); 0 when any weight is zero.
    double phase = 0.0;
    Complex product;
};

/// Argument in [0, 2*pi).
double arg_positive(Complex z);

ModulusProfile phase_normalize(const WeightedShift &ws);

ComplexMatrix to_matrix(const WeightedShift &ws);

/// 1-based indices j with |a_j| <= tol, ascending.
std::vector<std::size_t> zero_positions(const WeightedShift &ws, double tol = kDefaultTol);

}  // namespace wshift
