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

#include <stdexcept>
#include <string>

namespace chiral {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or argument outside the domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A pivot fell below the singularity threshold (spectral gap closed).
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Input to the Pfaffian (or an assembled kernel matrix) is not skew-symmetric.
class AsymmetryError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point on the branch cut [1, inf) of ln(1 - z).
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two parameter points coincide in the sense required by a closed form.
class CoincidentPointsError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Phase unwrapping or integral refinement ran out of depth.
class RefinementExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Phase tracking and contour integration produced different winding numbers.
class MethodDisagreementError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Too many Monte Carlo samples were rejected for the average to be trusted.
class RejectionRateError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated; indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace chiral
