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

#include "wshift/report_json.hpp"

#include <string>

#include "wshift/error.hpp"

namespace wshift::json {

namespace {

Regime regime_from_name(const std::string &s) {
    for (auto r : {Regime::NoZeros, Regime::OneZero, Regime::TwoZeros, Regime::ManyZeros})
        if (s == regime_name(r)) return r;
    throw Error(ErrorKind::Validation, "unknown regime '" + s + "'");
}

ReduceReason reason_from_name(const std::string &s) {
    for (auto r : {ReduceReason::TwoOrMoreZeros, ReduceReason::PeriodicWeights, ReduceReason::Irreducible})
        if (s == reduce_reason_name(r)) return r;
    throw Error(ErrorKind::Validation, "unknown reason '" + s + "'");
}

template <typename T, typename F>
Json optional_to_json(const std::optional<T> &v, F &&f) {
    return v ? f(*v) : Json(nullptr);
}

Json real_list(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

std::vector<double> squared_moduli(const WeightedShift &ws) {
    std::vector<double> out;
    out.reserve(ws.size());
    for (auto w : ws.weights()) out.push_back(std::norm(w));
    return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json &j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorKind::Validation, "complex value must be a number or [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::Validation, "matrix must be a non-empty array");
    const std::size_t n = j.size();
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != n) throw Error(ErrorKind::Validation, "matrix must be square");
        for (const auto &x : row) entries.push_back(complex_from_json(x));
    }
    return ComplexMatrix(n, std::move(entries));
}

Json shift_to_json(const WeightedShift &ws) {
    Json out = Json::array();
    for (auto w : ws.weights()) out.push_back(complex_to_json(w));
    return out;
}

WeightedShift shift_from_json(const Json &j) {
    if (!j.is_array()) throw Error(ErrorKind::Validation, "weights must be an array");
    std::vector<Complex> w;
    for (const auto &x : j) w.push_back(complex_from_json(x));
    return WeightedShift::make_block(std::move(w));
}

Json to_json(const ModulusProfile &p) {
    Json out;
    out["moduli"] = real_list(p.moduli);
    out["phase"] = p.phase;
    out["product"] = complex_to_json(p.product);
    return out;
}

Json to_json(const EquivalenceReport &r) {
    Json out;
    out["equivalent"] = r.equivalent;
    out["regime"] = regime_name(r.regime);
    out["shift_k"] = optional_to_json(r.shift_k, [](std::size_t k) { return Json(k); });
    out["block_matching"] =
        optional_to_json(r.block_matching, [](const std::vector<std::size_t> &t) { return Json(t); });
    out["witness"] = optional_to_json(r.witness, matrix_to_json);
    out["witness_residual"] = optional_to_json(r.witness_residual, [](double x) { return Json(x); });
    out["outside_proven_range"] = r.outside_proven_range;
    return out;
}

EquivalenceReport equivalence_from_json(const Json &j) {
    EquivalenceReport r;
    r.equivalent = j.at("equivalent").get<bool>();
    r.regime = regime_from_name(j.at("regime").get<std::string>());
    if (!j.at("shift_k").is_null()) r.shift_k = j["shift_k"].get<std::size_t>();
    if (!j.at("block_matching").is_null())
        r.block_matching = j["block_matching"].get<std::vector<std::size_t>>();
    if (!j.at("witness").is_null()) r.witness = matrix_from_json(j["witness"]);
    if (!j.at("witness_residual").is_null()) r.witness_residual = j["witness_residual"].get<double>();
    r.outside_proven_range = j.at("outside_proven_range").get<bool>();
    return r;
}

Json to_json(const DecompositionReport &r) {
    Json out;
    out["reducible"] = r.reducible;
    out["reason"] = reduce_reason_name(r.reason);
    out["period_k"] = optional_to_json(r.period_k, [](std::size_t k) { return Json(k); });
    out["theta"] = optional_to_json(r.theta, [](double x) { return Json(x); });
    out["base_block"] = optional_to_json(r.base_block, shift_to_json);
    out["scalar_summands"] = r.scalar_summands;
    Json blocks = Json::array();
    for (const auto &b : r.blocks) blocks.push_back(shift_to_json(b));
    out["blocks"] = std::move(blocks);
    Json summands = Json::array();
    for (const auto &s : r.summands) summands.push_back(matrix_to_json(s));
    out["summands"] = std::move(summands);
    out["unitary"] = optional_to_json(r.unitary, matrix_to_json);
    out["block_residual"] = optional_to_json(r.block_residual, [](double x) { return Json(x); });
    return out;
}

DecompositionReport decomposition_from_json(const Json &j) {
    DecompositionReport r;
    r.reducible = j.at("reducible").get<bool>();
    r.reason = reason_from_name(j.at("reason").get<std::string>());
    if (!j.at("period_k").is_null()) r.period_k = j["period_k"].get<std::size_t>();
    if (!j.at("theta").is_null()) r.theta = j["theta"].get<double>();
    if (!j.at("base_block").is_null()) r.base_block = shift_from_json(j["base_block"]);
    r.scalar_summands = j.at("scalar_summands").get<bool>();
    for (const auto &b : j.at("blocks")) r.blocks.push_back(shift_from_json(b));
    for (const auto &s : j.at("summands")) r.summands.push_back(matrix_from_json(s));
    if (!j.at("unitary").is_null()) r.unitary = matrix_from_json(j["unitary"]);
    if (!j.at("block_residual").is_null()) r.block_residual = j["block_residual"].get<double>();
    return r;
}

Json to_json(const KippenhahnPoly &p) {
    Json out;
    out["n"] = p.n;
    out["S_table"] = real_list(p.s_table.values);
    out["S_inputs"] = real_list(p.s_table.inputs);
    out["radial_coeffs"] = real_list(p.radial);
    out["product"] = complex_to_json(p.product_term);
    return out;
}

KippenhahnPoly kippenhahn_from_json(const Json &j) {
    KippenhahnPoly p;
    p.n = j.at("n").get<std::size_t>();
    p.s_table.n = p.n;
    p.s_table.values = j.at("S_table").get<std::vector<double>>();
    p.s_table.inputs = j.at("S_inputs").get<std::vector<double>>();
    p.radial = j.at("radial_coeffs").get<std::vector<double>>();
    p.product_term = complex_from_json(j.at("product"));
    return p;
}

Json to_json(const BoundarySamples &b) {
    Json out;
    out["angles"] = real_list(b.angles);
    out["support"] = real_list(b.support);
    Json points = Json::array();
    for (const auto &p : b.points) points.push_back(p ? complex_to_json(*p) : Json(nullptr));
    out["points"] = std::move(points);
    return out;
}

BoundarySamples boundary_from_json(const Json &j) {
    BoundarySamples b;
    b.angles = j.at("angles").get<std::vector<double>>();
    b.support = j.at("support").get<std::vector<double>>();
    for (const auto &p : j.at("points")) {
        if (p.is_null()) {
            b.points.emplace_back(std::nullopt);
        } else {
            b.points.emplace_back(complex_from_json(p));
        }
    }
    return b;
}

Json to_json(const DiscRadius &d) {
    Json out;
    out["radius"] = d.radius;
    out["max_deviation"] = d.max_deviation;
    return out;
}

Json range_equality_report(const WeightedShift &a, const WeightedShift &b, double tol) {
    Json out;
    out["equal"] = ranges_equal(a, b, tol);
    out["S_a"] = real_list(circ_sym_table(squared_moduli(a)).values);
    out["S_b"] = real_list(circ_sym_table(squared_moduli(b)).values);
    out["product_a"] = complex_to_json(a.product());
    out["product_b"] = complex_to_json(b.product());
    return out;
}

Json analyze_report(const WeightedShift &ws, double tol) {
    Json out;
    out["n"] = ws.size();
    out["weights"] = shift_to_json(ws);
    out["profile"] = to_json(phase_normalize(ws));
    out["zero_positions"] = zero_positions(ws, tol);

    const auto decision = is_reducible(ws, tol);
    out["reducibility"] = decision.reducible ? to_json(decompose(ws, tol)) : to_json(decision);
    out["kippenhahn"] = ws.size() >= 3 ? to_json(kippenhahn_poly(ws)) : Json(nullptr);
    out["disc"] = zero_positions(ws).empty() ? Json(nullptr) : to_json(disc_radius(ws));
    return out;
}

}  // namespace wshift::json
