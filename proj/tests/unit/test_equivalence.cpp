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
#include <numeric>

#include "oracles.hpp"
#include "wshift/equivalence.hpp"
#include "wshift/error.hpp"
#include "wshift/linalg.hpp"

using namespace wshift;
using wshift::testing::kPi;
using wshift::testing::RandomShifts;

namespace {

const WeightedShift kEx47A = make_shift({1.0, std::sqrt(2.0) / 2.0, std::sqrt(30.0) / 4.0});
const WeightedShift kEx47B = make_shift({std::sqrt(2.0), std::sqrt(3.0) / 2.0, std::sqrt(10.0) / 4.0});

// |A U - U B|_max and |U* U - I|_max, recomputed here.
void check_witness(const WeightedShift &a, const WeightedShift &b, const ComplexMatrix &u, double tol_u,
                   double tol_r) {
    CHECK(is_unitary(u, tol_u));
    const auto lhs = mat_mul(to_matrix(a), u);
    const auto rhs = mat_mul(u, to_matrix(b));
    CHECK(max_abs_diff(lhs, rhs) <= tol_r);
}

std::vector<double> sorted_moduli(const WeightedShift &ws) {
    std::vector<double> m;
    for (auto w : ws.weights()) m.push_back(std::abs(w));
    std::sort(m.begin(), m.end());
    return m;
}

// Multiply a_i by e^{i phi} and a_j by e^{-i phi}: same moduli, same product.
WeightedShift move_phase(const WeightedShift &ws, std::size_t i, std::size_t j, double phi) {
    std::vector<Complex> w(ws.weights().begin(), ws.weights().end());
    w[i] *= std::polar(1.0, phi);
    w[j] *= std::polar(1.0, -phi);
    return make_shift(std::move(w));
}

}  // namespace

TEST_CASE("cyclic_modulus_shift") {
    const auto a = make_shift({1, 2, 3});
    CHECK(cyclic_modulus_shift(a, make_shift({2, 3, 1})) == std::size_t{1});
    CHECK(cyclic_modulus_shift(a, a) == std::size_t{3});
    CHECK(cyclic_modulus_shift(a, make_shift({3, 1, 2})) == std::size_t{2});
    CHECK_FALSE(cyclic_modulus_shift(kEx47A, kEx47B).has_value());
    CHECK_FALSE(cyclic_modulus_shift(make_shift({1, 0, 2, 0, 3, 0}), make_shift({1, 0, 3, 0, 2, 0})).has_value());
    CHECK_THROWS_AS(cyclic_modulus_shift(a, make_shift({1, 2})), Error);
}

TEST_CASE("split_at_zeros") {
    auto d = split_at_zeros(make_shift({1, 0, 2, 0, 3, 0}));
    REQUIRE(d.blocks.size() == 3);
    CHECK(d.blocks[0] == WeightedShift::make_block({1.0, 0.0}));
    CHECK(d.blocks[1] == WeightedShift::make_block({2.0, 0.0}));
    CHECK(d.blocks[2] == WeightedShift::make_block({3.0, 0.0}));
    CHECK(d.sizes == std::vector<std::size_t>{2, 2, 2});

    d = split_at_zeros(make_shift({1, 2, 0}));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0] == make_shift({1, 2, 0}));

    d = split_at_zeros(make_shift({0, 0, 0}));
    REQUIRE(d.blocks.size() == 3);
    for (const auto &b : d.blocks) CHECK(b == WeightedShift::make_block({0.0}));

    // Each block ends in its only zero; sizes add up to n.
    d = split_at_zeros(make_shift({0, 4, 5, 0, 6, 1e-13}));
    CHECK(std::accumulate(d.sizes.begin(), d.sizes.end(), std::size_t{0}) == 6);
    for (const auto &b : d.blocks) {
        CHECK(b.weights().back() == Complex(0.0));
        for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(std::abs(b.weights()[i]) > 1e-10);
    }

    try {
        split_at_zeros(make_shift({1, 2, 3}));
        FAIL("expected precondition error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Precondition);
    }
}

TEST_CASE("split blocks reassemble the shift") {
    const auto ws = make_shift({Complex(0, 2), 0, 3, 0, 0, Complex(1, 1), 5, 0});
    const auto d = split_at_zeros(ws);
    std::vector<ComplexMatrix> mats;
    for (const auto &b : d.blocks) {
        // A block with its trailing zero is the truncated (non-cyclic) shift.
        ComplexMatrix m(b.size());
        for (std::size_t i = 0; i + 1 < b.size(); ++i) m(i, i + 1) = b.weights()[i];
        mats.push_back(m);
    }
    const auto direct = ComplexMatrix::direct_sum(mats);
    const auto rotated = to_matrix(ws.rotate(static_cast<std::int64_t>(d.rotation)));
    CHECK(max_abs_diff(direct, rotated) == 0.0);
}

TEST_CASE("block multiset matching with no cyclic offset") {
    const auto a = make_shift({1, 0, 2, 0, 3, 0});
    const auto b = make_shift({1, 0, 3, 0, 2, 0});
    const auto r = check_equivalent(a, b, kDefaultTol, true);
    CHECK(r.equivalent);
    CHECK(r.regime == Regime::ManyZeros);
    CHECK_FALSE(r.shift_k.has_value());
    REQUIRE(r.block_matching.has_value());
    // b's blocks are [1,0],[3,0],[2,0]; a's are [1,0],[2,0],[3,0].
    CHECK(*r.block_matching == std::vector<std::size_t>{1, 3, 2});
    REQUIRE(r.witness.has_value());
    check_witness(a, b, *r.witness, 1e-12, 1e-12);
    CHECK(*r.witness_residual <= 1e-12);
}

TEST_CASE("an equal-range pair that is not equivalent") {
    const auto r = check_equivalent(kEx47A, kEx47B);
    CHECK_FALSE(r.equivalent);
    CHECK(r.regime == Regime::NoZeros);
    CHECK_FALSE(r.witness.has_value());
    // Nor is B equivalent to A* (realized as the conjugated reversed shift).
    CHECK_FALSE(check_equivalent(kEx47A.reversed().conjugated(), kEx47B).equivalent);
}

TEST_CASE("rotation gives equivalence with that offset") {
    RandomShifts gen(101);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = gen.size_in(3, 9);
        const auto a = make_shift(gen.weights(n));
        const auto k = gen.size_in(1, n);
        const auto b = a.rotate(static_cast<std::int64_t>(k));
        const auto r = check_equivalent(a, b, kDefaultTol, true);
        CHECK(r.equivalent);
        CHECK(r.shift_k == k);
        REQUIRE(r.witness.has_value());
        check_witness(a, b, *r.witness, 1e-12, 1e-9);
    }
}

TEST_CASE("phase redistribution gives equivalence") {
    RandomShifts gen(102);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = gen.size_in(3, 9);
        const auto a = make_shift(gen.weights(n));
        const auto b = move_phase(a, 0, 1, gen.uniform(0, 2 * kPi));
        const auto r = check_equivalent(a, b, kDefaultTol, true);
        CHECK(r.equivalent);
        REQUIRE(r.witness.has_value());
        check_witness(a, b, *r.witness, 1e-9, 1e-8);
        CHECK(*r.witness_residual <= 1e-8);
    }
}

TEST_CASE("equal moduli but a different product is not equivalent") {
    const auto a = make_shift({1, 2, 3, 4});
    const auto b = make_shift({1, 2, 3, Complex(0, 4)});
    CHECK_FALSE(check_equivalent(a, b).equivalent);
    CHECK(check_equivalent(a, b).shift_k.has_value());
}

TEST_CASE("one and two zeros") {
    const auto a = make_shift({Complex(0, 1), 2, 0, 3});
    const auto b = make_shift({2, 0, 3, -1});
    auto r = check_equivalent(a, b, kDefaultTol, true);
    CHECK(r.regime == Regime::OneZero);
    CHECK(r.equivalent);
    check_witness(a, b, *r.witness, 1e-12, 1e-12);

    const auto c = make_shift({0, 2, 0, 3, 1});
    const auto d = make_shift({3, 1, 0, 2, 0});
    r = check_equivalent(c, d, kDefaultTol, true);
    CHECK(r.regime == Regime::TwoZeros);
    CHECK(r.equivalent);
    check_witness(c, d, *r.witness, 1e-12, 1e-12);

    // Same moduli and zero count, but no cyclic offset.
    CHECK_FALSE(check_equivalent(make_shift({1, 2, 0, 3, 0}), make_shift({2, 1, 0, 3, 0})).equivalent);
}

TEST_CASE("two-element shifts are flagged") {
    const auto r = check_equivalent(make_shift({1, 2}), make_shift({2, 1}));
    CHECK(r.equivalent);
    CHECK(r.outside_proven_range);
    CHECK_FALSE(check_equivalent(make_shift({1, 2, 3}), make_shift({1, 2, 3})).outside_proven_range);
}

TEST_CASE("zero counts must match in the many-zeros regime") {
    CHECK_FALSE(check_equivalent(make_shift({0, 0, 0, 1}), make_shift({0, 0, 1, 1})).equivalent);
    CHECK_FALSE(check_equivalent(make_shift({0, 0, 1, 1}), make_shift({0, 0, 0, 1})).equivalent);
}

TEST_CASE("reflexive, symmetric and necessary conditions hold") {
    RandomShifts gen(103);
    const std::vector<Complex> pool = {0.0, 1.0, 2.0, Complex(0, 1), -2.0};
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = gen.size_in(2, 6);
        std::vector<Complex> wa(n), wb(n);
        for (auto &x : wa) x = pool[gen.size_in(0, pool.size() - 1)];
        for (auto &x : wb) x = pool[gen.size_in(0, pool.size() - 1)];
        const auto a = make_shift(wa);
        const auto b = make_shift(wb);

        CHECK(check_equivalent(a, a).equivalent);
        const auto ab = check_equivalent(a, b, kDefaultTol, true);
        CHECK(ab.equivalent == check_equivalent(b, a).equivalent);
        if (ab.equivalent) {
            CHECK(sorted_moduli(a) == sorted_moduli(b));
            CHECK(std::abs(a.product() - b.product()) <= 1e-12);
            REQUIRE(ab.witness.has_value());
            check_witness(a, b, *ab.witness, 1e-9, 1e-8);
        }
    }
}

TEST_CASE("shuffled zero blocks stay equivalent") {
    RandomShifts gen(104);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = gen.size_in(3, 5);
        std::vector<std::vector<Complex>> blocks(m);
        for (auto &blk : blocks) {
            blk = gen.weights(gen.size_in(0, 3));
            blk.push_back(0.0);
        }
        auto flat = [](const std::vector<std::vector<Complex>> &bs) {
            std::vector<Complex> out;
            for (const auto &bb : bs) out.insert(out.end(), bb.begin(), bb.end());
            return out;
        };
        const auto a = make_shift(flat(blocks));
        std::shuffle(blocks.begin(), blocks.end(), gen.rng);
        // Phases inside a zero-terminated block are free.
        for (auto &blk : blocks)
            for (auto &x : blk) x *= std::polar(1.0, gen.uniform(0, 2 * kPi));
        const auto b = make_shift(flat(blocks)).rotate(static_cast<std::int64_t>(gen.size_in(0, 7)));
        const auto r = check_equivalent(a, b, kDefaultTol, true);
        CHECK(r.equivalent);
        CHECK(r.regime == Regime::ManyZeros);
        REQUIRE(r.block_matching.has_value());
        auto tau = *r.block_matching;
        std::sort(tau.begin(), tau.end());
        std::vector<std::size_t> ids(m);
        std::iota(ids.begin(), ids.end(), std::size_t{1});
        CHECK(tau == ids);
        check_witness(a, b, *r.witness, 1e-9, 1e-8);
    }
}

TEST_CASE("witness_permutation_unitary") {
    CHECK(witness_permutation_unitary(3, 3) == ComplexMatrix::identity(3));
    const auto p = witness_permutation_unitary(3, 1);
    const auto conj = mat_mul(mat_mul(adjoint(p), to_matrix(make_shift({1, 2, 3}))), p);
    CHECK(conj == to_matrix(make_shift({2, 3, 1})));
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) CHECK(is_unitary(witness_permutation_unitary(n, k), 0.0));
    CHECK_THROWS_AS(witness_permutation_unitary(3, 0), Error);
    CHECK_THROWS_AS(witness_permutation_unitary(3, 4), Error);
}

TEST_CASE("witness_diagonal_unitary") {
    auto conj_residual = [](const WeightedShift &a, const WeightedShift &b) {
        const auto d = witness_diagonal_unitary(a, b);
        const Complex rot = std::polar(1.0, diagonal_witness_phase(a, b));
        const auto lhs = mat_mul(mat_mul(adjoint(d), to_matrix(a)), d);
        return max_abs_diff(lhs, rot * to_matrix(b));
    };

    const auto a = make_shift({Complex(0.3, 0.4), 2, Complex(-1, 0)});
    CHECK(witness_diagonal_unitary(a, a) == ComplexMatrix::identity(3));
    CHECK(diagonal_witness_phase(a, a) == 0.0);

    const auto neg = make_shift({-1, -1, -1});
    const auto pos = make_shift({1, 1, 1});
    CHECK(diagonal_witness_phase(neg, pos) == doctest::Approx(kPi));
    CHECK(conj_residual(neg, pos) <= 1e-12);

    const auto ia = make_shift({Complex(0, 1), 1, 1});
    CHECK(diagonal_witness_phase(ia, pos) == doctest::Approx(kPi / 6));
    CHECK(conj_residual(ia, pos) <= 1e-12);

    RandomShifts gen(105);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = gen.size_in(2, 9);
        const auto x = make_shift(gen.weights(n));
        std::vector<Complex> w(x.weights().begin(), x.weights().end());
        for (auto &v : w) v = std::polar(std::abs(v), gen.uniform(0, 2 * kPi));
        const auto y = make_shift(w);
        CHECK(is_unitary(witness_diagonal_unitary(x, y), 1e-14));
        // Residual is absolute on entries of modulus up to 10.
        CHECK(conj_residual(x, y) <= 1e-10 * 10.0);
    }

    CHECK_THROWS_AS(witness_diagonal_unitary(pos, make_shift({1, 2, 1})), Error);
    CHECK_THROWS_AS(witness_diagonal_unitary(make_shift({1, 0, 1}), make_shift({1, 0, 1})), Error);
}
