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

#include <json.hpp>

#include "wshift/circsym.hpp"
#include "wshift/core.hpp"
#include "wshift/equivalence.hpp"
#include "wshift/kippenhahn.hpp"
#include "wshift/numrange.hpp"
#include "wshift/reducibility.hpp"

namespace wshift::json {

using Json = nlohmann::ordered_json;

// Complex values are always [re, im]; matrices are row-major nested arrays of
// such pairs. Doubles are written in shortest round-trip form.

Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j);

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

Json shift_to_json(const WeightedShift &ws);
WeightedShift shift_from_json(const Json &j);

Json to_json(const ModulusProfile &p);
Json to_json(const EquivalenceReport &r);
Json to_json(const DecompositionReport &r);
Json to_json(const KippenhahnPoly &p);
Json to_json(const BoundarySamples &b);
Json to_json(const DiscRadius &d);

EquivalenceReport equivalence_from_json(const Json &j);
DecompositionReport decomposition_from_json(const Json &j);
KippenhahnPoly kippenhahn_from_json(const Json &j);
BoundarySamples boundary_from_json(const Json &j);

/// {equal, S_a, S_b, product_a, product_b}
Json range_equality_report(const WeightedShift &a, const WeightedShift &b, double tol);

/// Everything known about one shift: weights, modulus profile, zero
/// positions, reducibility (with certificate when reducible), Kippenhahn
/// coefficients when n >= 3, and the disc radius when a weight is zero.
Json analyze_report(const WeightedShift &ws, double tol);

}  // namespace wshift::json
