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

#include "chiral/winding.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "chiral/errors.hpp"
#include "parallel.hpp"

namespace chiral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnwrapStep = kPi / 2.0;
constexpr int kMaxBisectionDepth = 20;
constexpr int kMaxIntegralDoublings = 12;
constexpr double kIntegralTolerance = 1e-9;
constexpr long kSamplesPerChunk = 64;

double phase_at(const CoefficientField& field, const EnsembleSample& sample, double p) {
  return LuDecomposition(eval_K(field, sample, p)).logdet().phase;
}

// Appends the unwrapped phase at p1 (and any bisection points before it).
void unwrap_segment(const CoefficientField& field, const EnsembleSample& sample, double p0,
                    double phi0, double p1, double raw1, int depth, WindingResult& out) {
  const double step = wrap_phase(raw1 - phi0);
  if (std::abs(step) <= kUnwrapStep) {
    out.phase_trace.push_back({p1, phi0 + step});
    return;
  }
  if (depth >= kMaxBisectionDepth) {
    throw RefinementExhaustedError("winding_number: phase jump not resolved after " +
                                   std::to_string(kMaxBisectionDepth) +
                                   " bisections near p = " + std::to_string(p0) +
                                   " (suspected eigenvalue crossing zero)");
  }
  out.refinement_depth = std::max(out.refinement_depth, depth + 1);
  const double pm = 0.5 * (p0 + p1);
  unwrap_segment(field, sample, p0, phi0, pm, phase_at(field, sample, pm), depth + 1, out);
  const double phim = out.phase_trace.back().phase;
  unwrap_segment(field, sample, pm, phim, p1, raw1, depth + 1, out);
}

struct GridPoint {
  double phase;
  Complex density;
};

GridPoint evaluate(const CoefficientField& field, const EnsembleSample& sample, double p) {
  const LuDecomposition lu(eval_K(field, sample, p));
  return {lu.logdet().phase, lu.trace_of_solve(eval_dK(field, sample, p))};
}

}  // namespace

Complex winding_density(const CoefficientField& field, const EnsembleSample& sample, double p) {
  return LuDecomposition(eval_K(field, sample, p)).trace_of_solve(eval_dK(field, sample, p));
}

WindingResult winding_number(const CoefficientField& field, const EnsembleSample& sample,
                             int grid_points) {
  if (grid_points < 16) throw DomainError("winding_number: grid_points must be at least 16");
  const int n = grid_points;
  const double h = 2.0 * kPi / n;

  std::vector<GridPoint> grid(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) grid[static_cast<std::size_t>(j)] = evaluate(field, sample, j * h);

  WindingResult out;
  out.phase_trace.reserve(static_cast<std::size_t>(n) + 1);
  out.phase_trace.push_back({0.0, grid[0].phase});
  for (int j = 1; j <= n; ++j) {
    const double p1 = j == n ? 2.0 * kPi : j * h;
    const double raw1 = j == n ? phase_at(field, sample, p1) : grid[static_cast<std::size_t>(j)].phase;
    const PhasePoint last = out.phase_trace.back();
    unwrap_segment(field, sample, last.p, last.phase, p1, raw1, 0, out);
  }
  const double total = out.phase_trace.back().phase - out.phase_trace.front().phase;
  out.W = static_cast<int>(std::lround(total / (2.0 * kPi)));

  // Periodic trapezoid rule; each doubling only evaluates the new midpoints.
  Complex sum{0.0, 0.0};
  for (const auto& g : grid) sum += g.density;
  int m = n;
  Complex integral = sum / static_cast<double>(m) / Complex{0.0, 1.0};
  bool converged = false;
  for (int d = 0; d < kMaxIntegralDoublings; ++d) {
    const double hm = 2.0 * kPi / m;
    for (int j = 0; j < m; ++j) sum += winding_density(field, sample, (j + 0.5) * hm);
    m *= 2;
    const Complex next = sum / static_cast<double>(m) / Complex{0.0, 1.0};
    const double change = std::abs(next - integral);
    integral = next;
    if (change <= kIntegralTolerance * std::max(1.0, std::abs(integral))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw RefinementExhaustedError("winding_number: contour integral did not converge after " +
                                   std::to_string(kMaxIntegralDoublings) + " grid doublings");
  }
  out.integral_value = integral;
  out.integral_grid = m;

  const long rounded = std::lround(integral.real());
  if (rounded != out.W || std::abs(integral - static_cast<double>(out.W)) >= 0.1) {
    throw MethodDisagreementError("winding_number: phase tracking gives " + std::to_string(out.W) +
                                  " but the integral gives " + std::to_string(integral.real()) +
                                  (integral.imag() < 0 ? " - " : " + ") +
                                  std::to_string(std::abs(integral.imag())) + "i");
  }
  return out;
}

WindingHistogram winding_samples(const CoefficientField& field, long n_samples, std::uint64_t seed,
                                 int grid_points) {
  if (n_samples < 1) throw DomainError("winding_samples: n_samples must be positive");
  const auto n_chunks = static_cast<std::size_t>((n_samples + kSamplesPerChunk - 1) / kSamplesPerChunk);
  auto chunks = detail::run_chunks<WindingHistogram>(n_chunks, [&](std::size_t c) {
    WindingHistogram part;
    RandomStream rng(seed, c);
    const long begin = static_cast<long>(c) * kSamplesPerChunk;
    const long count = std::min(kSamplesPerChunk, n_samples - begin);
    for (long i = 0; i < count; ++i) {
      const EnsembleSample sample = sample_pair(field.cls(), field.N(), rng);
      try {
        ++part.counts[winding_number(field, sample, grid_points).W];
      } catch (const MethodDisagreementError&) {
        ++part.disagreements;
      } catch (const SingularMatrixError&) {
        ++part.rejected;
      } catch (const RefinementExhaustedError&) {
        ++part.rejected;
      }
    }
    return part;
  });
  WindingHistogram out;
  out.seed = seed;
  out.n_samples = n_samples;
  for (const auto& part : chunks) {
    for (const auto& [w, count] : part.counts) out.counts[w] += count;
    out.rejected += part.rejected;
    out.disagreements += part.disagreements;
  }
  return out;
}

std::vector<SpectralFlowRow> spectral_flow(const CoefficientField& field,
                                           const EnsembleSample& sample, int steps) {
  if (steps < 1) throw DomainError("spectral_flow: steps must be positive");
  std::vector<SpectralFlowRow> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> hsolver;
  for (int j = 0; j <= steps; ++j) {
    SpectralFlowRow row;
    row.p = 2.0 * kPi * j / steps;
    const ComplexMatrix k = eval_K(field, sample, row.p);

    hsolver.compute(eval_H(field, sample, row.p), Eigen::EigenvaluesOnly);
    if (hsolver.info() != Eigen::Success) throw NoConvergenceError("spectral_flow: Hermitian solver failed");
    const auto& hev = hsolver.eigenvalues();
    row.h_eigenvalues.assign(hev.data(), hev.data() + hev.size());

    std::vector<Complex> kev = eigvals(k);
    if (rows.empty()) {
      std::sort(kev.begin(), kev.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
      });
      row.k_eigenvalues = std::move(kev);
    } else {
      // Greedy continuation: each previous eigenvalue takes its nearest unused successor.
      const auto& prev = rows.back().k_eigenvalues;
      std::vector<bool> used(kev.size(), false);
      row.k_eigenvalues.reserve(kev.size());
      for (const Complex& target : prev) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < kev.size(); ++i) {
          if (!used[i] && std::abs(kev[i] - target) < best_dist) {
            best_dist = std::abs(kev[i] - target);
            best = i;
          }
        }
        used[best] = true;
        row.k_eigenvalues.push_back(kev[best]);
      }
    }

    try {
      row.det_k = LuDecomposition(k).logdet().value();
    } catch (const SingularMatrixError&) {
      row.det_k = Complex{0.0, 0.0};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace chiral
