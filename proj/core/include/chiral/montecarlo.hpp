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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chiral/analytic.hpp"
#include "chiral/field.hpp"

namespace chiral {

enum class Aggregation { PlainMean, MedianOfMeans };

std::string_view to_string(Aggregation method);
/// Accepts "plain-mean" or "median-of-means".
Aggregation parse_aggregation(std::string_view name);

/// Monte Carlo result. Both aggregations are always computed; mean and
/// standard_error repeat the one selected by method.
struct Estimate {
  Complex mean;
  double standard_error = 0.0;
  long n_samples = 0;
  Aggregation method = Aggregation::MedianOfMeans;
  int blocks = 0;
  std::uint64_t seed = 0;
  long rejected = 0;

  Complex plain_mean;
  double plain_standard_error = 0.0;
  Complex mom_mean;
  double mom_standard_error = 0.0;
};

struct McOptions {
  long n_samples = 1'000'000;
  std::uint64_t seed = 0;
  Aggregation method = Aggregation::MedianOfMeans;
  int blocks = 32;
  /// When set, every draw reuses this pair instead of sampling.
  std::optional<EnsembleSample> fixed_sample;
};

/// Samples per random stream; chunk c draws from RandomStream(seed, c).
inline constexpr long kChunkSize = 4096;
/// Largest tolerated fraction of rejected samples.
inline constexpr double kMaxRejectionRate = 1e-3;

/// Aggregates per-sample values given in log form, in order. Blocks are
/// contiguous. Throws RejectionRateError if rejected / (accepted + rejected)
/// exceeds kMaxRejectionRate.
Estimate aggregate(std::span<const LogScalar> samples, long rejected, const McOptions& options);

/// <prod_j det K(p_j) / prod_j det K(q_j)>. The lists may differ in length.
/// Samples with a singular denominator are rejected.
Estimate mc_partition(const CoefficientField& field, std::span<const double> q,
                      std::span<const double> p, const McOptions& options);
Estimate mc_partition(const CoefficientField& field, const PointSets& points, const McOptions& options);

/// <det K(p_m) det K(p_n)> / <det K1^2> over quaternion Ginibre pairs of
/// size 2(N-1), as a ratio estimator. CII only; method is always plain mean.
Estimate mc_det_product(const CoefficientField& field, double pm, double pn, const McOptions& options);

/// Reweighted estimate of Z~^{(4,M)}_{k|l} with weight exponent N = field.N(),
/// k = q.size(), l = p.size(). Needs l - k even and M + (l-k)/2 < N+1.
/// Warns when the effective sample size of the weights is below 1%.
Estimate mc_z_tilde(const CoefficientField& field, int M, std::span<const double> q,
                    std::span<const double> p, const McOptions& options);

/// <prod_j w(p_j)>; samples with a singular K(p_j) are rejected.
Estimate mc_correlator(const CoefficientField& field, std::span<const double> p, const McOptions& options);

}  // namespace chiral
