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

#include <stdexcept>
#include <string>

namespace wshift {

enum class ErrorKind {
    Dimension,
    Validation,
    Domain,
    Contract,
    Convergence,
    Precondition,
    Size,
    Regime,
};

const char *error_kind_name(ErrorKind kind) noexcept;

/// Exception carried out of every library operation. The C API maps `kind()`
/// onto its status codes.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what, double residual = 0.0)
        : std::runtime_error(what), kind_(kind), residual_(residual) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Only meaningful for ErrorKind::Convergence.
    double residual() const noexcept { return residual_; }

   private:
    ErrorKind kind_;
    double residual_;
};

}  // namespace wshift
