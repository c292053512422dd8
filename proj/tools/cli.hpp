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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wshift::cli {

enum class Command { Equiv, Reduce, Kipp, Wequal, Boundary, Analyze };
enum class Format { Json, Csv, Svg };

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct WeightList {
    std::vector<double> re;
    std::vector<double> im;
};

struct JobSpec {
    Command command = Command::Analyze;
    /// Two lists for equiv and wequal, one otherwise.
    std::vector<WeightList> inputs;
    double tol = 1e-10;
    std::size_t samples = 256;
    std::optional<std::string> out_path;
    Format format = Format::Json;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses one token such as "2", "-1.5e-3", "i", "-2i", "1+2i" or "0.5-i".
/// Throws UsageError when malformed.
std::complex<double> parse_complex_token(std::string_view token);

/// An existing file path is read as a JSON array of numbers or [re, im]
/// pairs; anything else is parsed as comma-separated complex tokens.
WeightList parse_weights(const std::string &file_or_inline);

/// argv[0] is the program name. Throws UsageError (exit 2) on bad input and
/// IoError when a weights file cannot be read.
JobSpec parse_args(const std::vector<std::string> &argv);

/// Writes the report to `out` (or the job's output file) and diagnostics to
/// `err`; returns the process exit code.
int run(const JobSpec &job, std::ostream &out, std::ostream &err);

/// parse_args + run with exit-code mapping; what main() calls.
int main_entry(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

}  // namespace wshift::cli
