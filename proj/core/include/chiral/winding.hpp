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
#include <map>
#include <vector>

#include "chiral/field.hpp"

namespace chiral {

/// w(p) = tr[K(p)^{-1} K'(p)] = d/dp ln det K(p).
/// Throws SingularMatrixError when K(p) is singular (gap closed).
Complex winding_density(const CoefficientField& field, const EnsembleSample& sample, double p);

struct PhasePoint {
  double p = 0.0;
  /// Unwrapped arg det K(p).
  double phase = 0.0;
};

struct WindingResult {
  int W = 0;
  std::vector<PhasePoint> phase_trace;
  /// Deepest bisection level used while unwrapping.
  int refinement_depth = 0;
  /// (1 / 2 pi i) times the trapezoidal integral of w over [0, 2 pi].
  Complex integral_value;
  /// Grid size at which the integral converged.
  int integral_grid = 0;
};

/// Winding number by phase tracking on grid_points steps (bisection wherever a
/// step exceeds pi/2, depth <= 20), cross-checked by the integral of w.
/// Throws RefinementExhaustedError when either method cannot resolve the
/// sample and MethodDisagreementError when they round differently.
WindingResult winding_number(const CoefficientField& field, const EnsembleSample& sample,
                             int grid_points = 100);

struct WindingHistogram {
  std::map<int, long> counts;
  long n_samples = 0;
  /// Singular or unresolvable samples, excluded from counts.
  long rejected = 0;
  /// Samples where the two methods disagreed, excluded from counts.
  long disagreements = 0;
  std::uint64_t seed = 0;
};

/// Empirical distribution of W over fresh samples of field.cls() and field.N().
WindingHistogram winding_samples(const CoefficientField& field, long n_samples, std::uint64_t seed,
                                 int grid_points = 100);

struct SpectralFlowRow {
  double p = 0.0;
  /// Eigenvalues of H(p), ascending.
  std::vector<double> h_eigenvalues;
  /// Eigenvalues of K(p), ordered to follow the previous row.
  std::vector<Complex> k_eigenvalues;
  Complex det_k;
};

/// Rows at p = 2 pi j / steps, j = 0..steps.
std::vector<SpectralFlowRow> spectral_flow(const CoefficientField& field,
                                           const EnsembleSample& sample, int steps = 100);

}  // namespace chiral
