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

#include <optional>
#include <vector>

#include "wshift/core.hpp"

namespace wshift {

struct EigenResult {
    /// Ascending.
    std::vector<double> values;
    /// max_j |H v_j - lambda_j v_j| when vectors were requested, otherwise the
    /// off-diagonal Frobenius norm left at termination.
    double residual = 0.0;
    /// Column j is the unit eigenvector for values[j]. Present on request only.
    std::optional<ComplexMatrix> vectors;
};

ComplexMatrix mat_mul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &m);

/// (M + M*) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &m);
/// (M - M*) / (2i)
ComplexMatrix skew_hermitian_part(const ComplexMatrix &m);

/// Determinant by LU with scaled partial pivoting. Singular input gives 0.
Complex det_complex(const ComplexMatrix &m);

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Input must satisfy |H - H*|_F <= 1e-10 |H|_F (ErrorKind::Contract
/// otherwise). Sweeps stop once the off-diagonal Frobenius norm falls to
/// 1e-12 |H|_F; failing that within 100 sweeps raises
/// ErrorKind::Convergence carrying the residual.
EigenResult hermitian_eigenvalues(const ComplexMatrix &h, bool want_vectors = false);

/// |U*U - I|_max <= tol.
bool is_unitary(const ComplexMatrix &u, double tol);

}  // namespace wshift
