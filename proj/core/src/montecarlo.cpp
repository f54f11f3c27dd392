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

#include "chiral/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "chiral/diagnostics.hpp"
#include "chiral/errors.hpp"
#include "chiral/specfun.hpp"
#include "chiral/winding.hpp"
#include "parallel.hpp"

namespace chiral {

namespace {

constexpr double kPi = std::numbers::pi;

struct Chunk {
  std::vector<LogScalar> values;
  long rejected = 0;
  /// Reweighting factors in log form; filled only by mc_z_tilde.
  std::vector<double> log_weights;
};

// Mean and standard error of the mean of x, shifted by x[0] so that
// identical values give an exact mean and a zero error.
std::pair<Complex, double> mean_and_error(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  if (n == 0) return {Complex{0.0, 0.0}, 0.0};
  const Complex shift = x[0];
  Complex sum{0.0, 0.0};
  double sum_sq = 0.0;
  for (const Complex& v : x) {
    const Complex d = v - shift;
    sum += d;
    sum_sq += std::norm(d);
  }
  const double dn = static_cast<double>(n);
  const Complex mean_d = sum / dn;
  if (n < 2) return {shift + mean_d, 0.0};
  const double var = std::max(0.0, (sum_sq - dn * std::norm(mean_d)) / (dn - 1.0));
  return {shift + mean_d, std::sqrt(var / dn)};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Runs fn(rng, values, rejected) for every chunk and concatenates in order.
template <class Fn>
Chunk run_sampler(long n_samples, std::uint64_t seed, Fn fn) {
  if (n_samples < 1) throw DomainError("Monte Carlo: n_samples must be positive");
  const auto n_chunks = static_cast<std::size_t>((n_samples + kChunkSize - 1) / kChunkSize);
  auto chunks = detail::run_chunks<Chunk>(n_chunks, [&](std::size_t c) {
    Chunk out;
    RandomStream rng(seed, c);
    const long count = std::min(kChunkSize, n_samples - static_cast<long>(c) * kChunkSize);
    out.values.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) fn(rng, out);
    return out;
  });
  Chunk all;
  all.values.reserve(static_cast<std::size_t>(n_samples));
  for (auto& c : chunks) {
    all.values.insert(all.values.end(), c.values.begin(), c.values.end());
    all.log_weights.insert(all.log_weights.end(), c.log_weights.begin(), c.log_weights.end());
    all.rejected += c.rejected;
  }
  return all;
}

EnsembleSample draw(const CoefficientField& field, const McOptions& options, RandomStream& rng) {
  if (options.fixed_sample) return *options.fixed_sample;
  return sample_pair(field.cls(), field.N(), rng);
}

LogScalar logdet_or_zero(ComplexMatrix m) {
  try {
    return LuDecomposition(std::move(m)).logdet();
  } catch (const SingularMatrixError&) {
    return LogScalar::zero();
  }
}

Complex kappa(const CoefficientField& field, double p) {
  const Vec2 v = field.v(p);
  if (v(1) == Complex{0.0, 0.0}) throw DomainError("mc_z_tilde: b(p) = 0, kappa undefined");
  return v(0) / v(1);
}

}  // namespace

std::string_view to_string(Aggregation method) {
  return method == Aggregation::PlainMean ? "plain-mean" : "median-of-means";
}

Aggregation parse_aggregation(std::string_view name) {
  if (name == "plain-mean") return Aggregation::PlainMean;
  if (name == "median-of-means") return Aggregation::MedianOfMeans;
  throw DomainError("unknown aggregation '" + std::string(name) + "' (expected plain-mean or median-of-means)");
}

Estimate aggregate(std::span<const LogScalar> samples, long rejected, const McOptions& options) {
  const long n = static_cast<long>(samples.size());
  const long total = n + rejected;
  if (total > 0 && static_cast<double>(rejected) > kMaxRejectionRate * static_cast<double>(total)) {
    throw RejectionRateError("Monte Carlo: " + std::to_string(rejected) + " of " + std::to_string(total) +
                             " samples rejected (limit 0.1%)");
  }
  if (options.blocks < 1) throw DomainError("Monte Carlo: blocks must be positive");

  Estimate est;
  est.n_samples = n;
  est.method = options.method;
  est.seed = options.seed;
  est.rejected = rejected;
  if (n == 0) return est;

  // Shared scale: the largest magnitude; values are exponentiated relative to it.
  double scale = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples) scale = std::max(scale, s.log_abs);
  if (scale == -std::numeric_limits<double>::infinity()) scale = 0.0;
  const double factor = std::exp(scale);

  std::vector<Complex> x(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    x[i] = s.is_zero() ? Complex{0.0, 0.0} : std::polar(std::exp(s.log_abs - scale), s.phase);
  }
  const auto [plain, plain_err] = mean_and_error(x);
  est.plain_mean = plain * factor;
  est.plain_standard_error = plain_err * factor;

  const long blocks = std::min<long>(options.blocks, n);
  est.blocks = static_cast<int>(blocks);
  std::vector<Complex> block_means;
  block_means.reserve(static_cast<std::size_t>(blocks));
  for (long b = 0; b < blocks; ++b) {
    const long begin = b * n / blocks;
    const long end = (b + 1) * n / blocks;
    std::vector<Complex> part(x.begin() + begin, x.begin() + end);
    block_means.push_back(mean_and_error(part).first);
  }
  std::vector<double> re, im;
  for (const Complex& m : block_means) {
    re.push_back(m.real());
    im.push_back(m.imag());
  }
  const Complex mom{median(re), median(im)};
  const double spread = mean_and_error(block_means).second;  // sd / sqrt(B)
  est.mom_mean = mom * factor;
  est.mom_standard_error = std::sqrt(kPi / 2.0) * spread * factor;

  if (options.method == Aggregation::PlainMean) {
    est.mean = est.plain_mean;
    est.standard_error = est.plain_standard_error;
  } else {
    est.mean = est.mom_mean;
    est.standard_error = est.mom_standard_error;
  }
  return est;
}

Estimate mc_partition(const CoefficientField& field, std::span<const double> q, std::span<const double> p,
                      const McOptions& options) {
  const std::vector<Vec2> vq = eval_points(field, q);
  const std::vector<Vec2> vp = eval_points(field, p);
  const bool trivial = vq.empty() && vp.empty();
  const Chunk all = run_sampler(options.n_samples, options.seed, [&](RandomStream& rng, Chunk& out) {
    if (trivial) {
      out.values.push_back(LogScalar{});
      return;
    }
    const EnsembleSample s = draw(field, options, rng);
    LogScalar value;
    try {
      for (const Vec2& v : vq) value /= LuDecomposition(v(0) * s.K1 + v(1) * s.K2).logdet();
    } catch (const SingularMatrixError&) {
      ++out.rejected;
      return;
    }
    for (const Vec2& v : vp) value *= logdet_or_zero(v(0) * s.K1 + v(1) * s.K2);
    out.values.push_back(value);
  });
  return aggregate(all.values, all.rejected, options);
}

Estimate mc_partition(const CoefficientField& field, const PointSets& points, const McOptions& options) {
  return mc_partition(field, points.q, points.p, options);
}

Estimate mc_det_product(const CoefficientField& field, double pm, double pn, const McOptions& options) {
  if (field.cls() != SymmetryClass::CII) throw DomainError("mc_det_product: requires class CII");
  if (options.n_samples < 2) throw DomainError("mc_det_product: needs at least two samples");
  const int M = field.N() - 1;
  const Vec2 vm = field.v(pm);
  const Vec2 vn = field.v(pn);

  struct Pair {
    std::vector<Complex> x, y;
  };
  const auto n_chunks = static_cast<std::size_t>((options.n_samples + kChunkSize - 1) / kChunkSize);
  auto chunks = detail::run_chunks<Pair>(n_chunks, [&](std::size_t c) {
    Pair out;
    RandomStream rng(options.seed, c);
    const long count = std::min(kChunkSize, options.n_samples - static_cast<long>(c) * kChunkSize);
    for (long i = 0; i < count; ++i) {
      if (M == 0) {
        out.x.emplace_back(1.0);
        out.y.emplace_back(1.0);
        continue;
      }
      const ComplexMatrix k1 = sample_ginibre_quaternion(M, rng);
      const ComplexMatrix k2 = sample_ginibre_quaternion(M, rng);
      const LogScalar a = logdet_or_zero(vm(0) * k1 + vm(1) * k2);
      const LogScalar b = logdet_or_zero(vn(0) * k1 + vn(1) * k2);
      out.x.push_back((a * b).value());
      out.y.push_back(pow(logdet_or_zero(k1), 2).value());
    }
    return out;
  });
  std::vector<Complex> x, y;
  for (auto& c : chunks) {
    x.insert(x.end(), c.x.begin(), c.x.end());
    y.insert(y.end(), c.y.begin(), c.y.end());
  }

  Complex sx{0.0, 0.0}, sy{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const Complex ratio = sx / sy;
  const double n = static_cast<double>(x.size());
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) rss += std::norm(x[i] - ratio * y[i]);
  const double err = std::sqrt(rss / (n * (n - 1.0))) / std::abs(sy / n);

  Estimate est;
  est.mean = est.plain_mean = est.mom_mean = ratio;
  est.standard_error = est.plain_standard_error = est.mom_standard_error = err;
  est.n_samples = options.n_samples;
  est.method = Aggregation::PlainMean;
  est.blocks = 1;
  est.seed = options.seed;
  return est;
}

Estimate mc_z_tilde(const CoefficientField& field, int M, std::span<const double> q, std::span<const double> p,
                    const McOptions& options) {
  if (field.cls() != SymmetryClass::CII) throw DomainError("mc_z_tilde: requires class CII");
  const int N = field.N();
  const int k = static_cast<int>(q.size());
  const int l = static_cast<int>(p.size());
  if ((l - k) % 2 != 0) throw DomainError("mc_z_tilde: l - k must be even");
  const int m_shift = M + (l - k) / 2;
  if (M < 1 || m_shift < 0 || m_shift >= N + 1) throw DomainError("mc_z_tilde: need M >= 1 and M + (l-k)/2 < N+1");

  std::vector<Complex> kq, kp;
  for (double x : q) kq.push_back(kappa(field, x));
  for (double x : p) kp.push_back(kappa(field, x));

  // Ratio of the size-M spherical normalization to the Z~ prefactor.
  double log_norm = log_spherical_norm(SymmetryClass::CII, M);
  log_norm -= m_shift * std::log(2.0 * kPi) + boost::math::lgamma(M + 1.0);
  for (int j = 1; j <= m_shift; ++j) log_norm -= log_beta(2.0 * j, 2.0 * N + 2.0 - 2.0 * j);

  const Chunk all = run_sampler(options.n_samples, options.seed, [&](RandomStream& rng, Chunk& out) {
    const SphericalSpectrum spec = spherical_sample(SymmetryClass::CII, M, rng);
    LogScalar value{log_norm, 0.0};
    double log_weight = 0.0;
    for (const Complex& z : spec.eigenvalues) log_weight += (M - N) * std::log1p(std::norm(z));
    value.log_abs += log_weight;
    out.log_weights.push_back(log_weight);
    try {
      for (const Complex& c : kq) {
        for (const Complex& z : spec.eigenvalues) value /= LogScalar::from_complex(c + z);
      }
    } catch (const DomainError&) {
      ++out.rejected;
      return;
    }
    for (const Complex& c : kp) {
      for (const Complex& z : spec.eigenvalues) value *= LogScalar::from_complex(c + z);
    }
    out.values.push_back(value);
  });

  if (!all.log_weights.empty()) {
    const double top = *std::max_element(all.log_weights.begin(), all.log_weights.end());
    double sum = 0.0, sum_sq = 0.0;
    for (double lw : all.log_weights) {
      const double w = std::exp(lw - top);
      sum += w;
      sum_sq += w * w;
    }
    const double ess = sum * sum / sum_sq;
    if (ess < 0.01 * static_cast<double>(all.log_weights.size())) {
      warn("mc_z_tilde: effective sample size " + std::to_string(ess) + " is below 1% of " +
           std::to_string(all.log_weights.size()) + " samples");
    }
  }
  Estimate est = aggregate(all.values, all.rejected, options);
  return est;
}

Estimate mc_correlator(const CoefficientField& field, std::span<const double> p, const McOptions& options) {
  const Chunk all = run_sampler(options.n_samples, options.seed, [&](RandomStream& rng, Chunk& out) {
    const EnsembleSample s = draw(field, options, rng);
    LogScalar value;
    try {
      for (double x : p) value *= LogScalar::from_complex(winding_density(field, s, x));
    } catch (const SingularMatrixError&) {
      ++out.rejected;
      return;
    }
    out.values.push_back(value);
  });
  return aggregate(all.values, all.rejected, options);
}

}  // namespace chiral
