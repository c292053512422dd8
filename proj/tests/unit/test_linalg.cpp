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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "wshift/error.hpp"
#include "wshift/linalg.hpp"

using namespace wshift;
using wshift::testing::kPi;
using wshift::testing::RandomShifts;

namespace {

ComplexMatrix random_matrix(RandomShifts &gen, std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = {gen.uniform(-1, 1), gen.uniform(-1, 1)};
    return m;
}

ComplexMatrix random_hermitian(RandomShifts &gen, std::size_t n) { return hermitian_part(random_matrix(gen, n)); }

// Real symmetric 3x3 eigenvalues by the trigonometric solution of the
// characteristic cubic.
std::vector<double> cubic_eigenvalues(double a[3][3]) {
    const double p1 = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    const double q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    const double p2 = (a[0][0] - q) * (a[0][0] - q) + (a[1][1] - q) * (a[1][1] - q) +
                      (a[2][2] - q) * (a[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    double b[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (a[i][j] - (i == j ? q : 0.0)) / p;
    const double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                        b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                        b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    std::vector<double> eig = {q + 2 * p * std::cos(phi), q + 2 * p * std::cos(phi + 2 * kPi / 3),
                               0.0};
    eig[2] = 3 * q - eig[0] - eig[1];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

TEST_CASE("mat_mul") {
    RandomShifts gen(1);
    const auto m = random_matrix(gen, 3);
    CHECK(mat_mul(ComplexMatrix::identity(3), m) == m);
    CHECK(mat_mul(m, ComplexMatrix(3)) == ComplexMatrix(3));
    const auto a = to_matrix(make_shift({1, 2, 3}));
    CHECK(mat_mul(a, adjoint(a)) == ComplexMatrix(3, {1, 0, 0, 0, 4, 0, 0, 0, 9}));
    CHECK_THROWS_AS(mat_mul(ComplexMatrix(2), ComplexMatrix(3)), Error);
}

TEST_CASE("adjoint") {
    const ComplexMatrix d(2, {3, 0, 0, -1});
    CHECK(adjoint(d) == d);
    const ComplexMatrix m(2, {0, Complex(0, 1), 0, 0});
    CHECK(adjoint(m) == ComplexMatrix(2, {0, 0, Complex(0, -1), 0}));
    RandomShifts gen(2);
    const auto r = random_matrix(gen, 4);
    CHECK(adjoint(adjoint(r)) == r);
}

TEST_CASE("hermitian and skew-hermitian parts recombine") {
    RandomShifts gen(3);
    const auto m = random_matrix(gen, 5);
    const auto re = hermitian_part(m);
    const auto im = skew_hermitian_part(m);
    CHECK(max_abs_diff(re + Complex(0, 1) * im, m) <= 1e-15);
    CHECK(max_abs_diff(adjoint(im), im) == 0.0);
}

TEST_CASE("det_complex") {
    const double a3 = std::sqrt(30.0) / 4.0;
    const auto ex = to_matrix(make_shift({1.0, std::sqrt(2.0) / 2.0, a3}));
    // (-1)^{n+1} a_1 a_2 a_3 with n = 3
    CHECK(std::abs(det_complex(ex) - std::sqrt(60.0) / 8.0) <= 1e-15);
    CHECK(det_complex(ComplexMatrix::identity(5)) == Complex(1.0));
    CHECK(det_complex(ComplexMatrix(3)) == Complex(0.0));

    RandomShifts gen(4);
    for (std::size_t n = 2; n <= 12; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto w = gen.weights(n);
            Complex prod = 1.0;
            for (auto x : w) prod *= x;
            const Complex want = (n % 2 == 1 ? 1.0 : -1.0) * prod;
            CHECK(std::abs(det_complex(to_matrix(make_shift(w))) - want) <= 1e-10 * std::abs(want));
        }
    }
}

TEST_CASE("det_complex on a 2x2 against ad - bc") {
    RandomShifts gen(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(gen, 2);
        const Complex want = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        CHECK(std::abs(det_complex(m) - want) <= 1e-14);
    }
}

TEST_CASE("hermitian_eigenvalues small cases") {
    const Complex d3[] = {3.0, 1.0, 2.0};
    auto r = hermitian_eigenvalues(ComplexMatrix::diagonal(d3));
    CHECK(r.values == std::vector<double>{1.0, 2.0, 3.0});

    r = hermitian_eigenvalues(hermitian_part(to_matrix(make_shift({1, 1}))));
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    // Re of the 3-cycle: circulant with off-diagonal 1/2.
    const auto h = hermitian_part(to_matrix(make_shift({1, 1, 1})));
    double a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).real();
    const auto want = cubic_eigenvalues(a);
    r = hermitian_eigenvalues(h);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(r.values[static_cast<std::size_t>(i)] - want[static_cast<std::size_t>(i)]) <= 1e-13);
    CHECK(r.values[0] == doctest::Approx(-0.5));
    CHECK(r.values[2] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
    const ComplexMatrix m(2, {0, 1, 0, 0});
    try {
        hermitian_eigenvalues(m);
        FAIL("expected a contract error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Contract);
    }
}

TEST_CASE("hermitian_eigenvalues properties") {
    RandomShifts gen(7);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto h = random_hermitian(gen, n);
        const auto r = hermitian_eigenvalues(h, true);
        CHECK(std::is_sorted(r.values.begin(), r.values.end()));
        CHECK(r.residual <= 1e-10);

        double trace = 0.0, sum = 0.0, abs_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += h(i, i).real();
        for (double v : r.values) {
            sum += v;
            abs_sum += std::abs(v);
        }
        CHECK(std::abs(sum - trace) <= 1e-10 * std::max(1.0, abs_sum));

        double prod = 1.0;
        for (double v : r.values) prod *= v;
        const Complex det = det_complex(h);
        CHECK(std::abs(prod - det.real()) <= 1e-8 * std::max(1.0, std::abs(det)));

        const double c = gen.uniform(-3, 3);
        auto shifted = h;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c;
        const auto rs = hermitian_eigenvalues(shifted);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(rs.values[i] - (r.values[i] + c)) <= 1e-10 * std::max(1.0, abs_sum));

        // Eigenvector columns: H v = lambda v and orthonormal.
        REQUIRE(r.vectors.has_value());
        CHECK(is_unitary(*r.vectors, 1e-10));
        const auto hv = mat_mul(h, *r.vectors);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(hv(i, j) - r.values[j] * (*r.vectors)(i, j)) <= 1e-10);
    }
}

TEST_CASE("eigenvalues of x Re A + y Im A reproduce its determinant") {
    RandomShifts gen(9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = gen.size_in(3, 9);
        const auto a = to_matrix(make_shift(gen.weights(n)));
        const double x = gen.uniform(-2, 2), y = gen.uniform(-2, 2), z = gen.uniform(-2, 2);
        ComplexMatrix h = Complex(x) * hermitian_part(a) + Complex(y) * skew_hermitian_part(a);
        const auto r = hermitian_eigenvalues(h);
        double prod = 1.0;
        for (double v : r.values) prod *= v + z;
        for (std::size_t i = 0; i < n; ++i) h(i, i) += z;
        const double det = det_complex(h).real();
        CHECK(std::abs(prod - det) <= 1e-8 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(ComplexMatrix::identity(4), 0.0));
    CHECK_FALSE(is_unitary(Complex(2.0) * ComplexMatrix::identity(4), 1e-9));

    // The 6x6 block Fourier matrix for weights 1,2,1,2,1,2, entered as displayed.
    const Complex w = std::polar(1.0, kPi / 3.0);
    auto p = [&](int e) { return std::pow(w, e); };
    const Complex o = 0.0, one = 1.0;
    ComplexMatrix u(6, {one, o, one, o, one, o,       //
                        o, one, o, p(1), o, p(2),     //
                        one, o, p(2), o, p(4), o,     //
                        o, one, o, p(3), o, p(6),     //
                        one, o, p(4), o, p(8), o,     //
                        o, one, o, p(5), o, p(10)});
    u *= 1.0 / std::sqrt(3.0);
    CHECK(is_unitary(u, 1e-12));
}
