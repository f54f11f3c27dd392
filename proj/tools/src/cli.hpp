// Copyright 2026 The chiralwind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chiral/field.hpp"
#include "chiral/montecarlo.hpp"

namespace chiral::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kConfigError = 2, kNumericalFailure = 3 };

/// Invalid command line or configuration file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  SymmetryClass cls = SymmetryClass::AIII;
  int N = 2;
  FieldForm form = FieldForm::Trig;
  std::vector<FourierTerm> fourier_a;
  std::vector<FourierTerm> fourier_b;

  CoefficientField build() const;
};

struct RunConfig {
  std::string command;
  FieldSpec field;
  int k = 1;
  std::vector<double> q;
  std::vector<double> p;
  long samples = 1'000'000;
  std::uint64_t seed = 0;
  Aggregation method = Aggregation::MedianOfMeans;
  int blocks = 32;
  int steps = 100;
  int grid = 100;
  std::string format;
  /// Not part of the embedded config, so the output path does not change the output.
  std::string out;
};

/// Parses argv, runs the subcommand and returns the exit code. Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chiral::cli
