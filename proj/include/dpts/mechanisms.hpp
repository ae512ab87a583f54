// Copyright 2026 The dpts Authors
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

#include <cstdint>
#include <optional>
#include <utility>

#include "dpts/accounting.hpp"
#include "dpts/common.hpp"
#include "dpts/filters.hpp"
#include "dpts/random.hpp"
#include "dpts/series.hpp"

namespace dpts::mechanisms {

enum class MechanismKind { gaussian, dft, subsample, filter_subsample };

const char* mechanism_kind_name(MechanismKind kind);
MechanismKind mechanism_kind_from_name(const std::string& name);

/// Full description of a release. Only the fields relevant to `kind` may be
/// set; `validate_config` enforces this. For the subsampling kinds the noise
/// multiplier comes from exactly one of `alpha`, `i_prime`, or
/// `delta_prime_target` -- or, when none is given, from splitting the
/// (epsilon, delta) budget via accounting::budget_solve.
struct MechanismConfig {
  MechanismKind kind = MechanismKind::gaussian;
  double epsilon = 0.5;
  double delta = 1e-4;
  int participation = 1;  // I: max time steps one individual contributes to
  std::optional<double> sampling_rate;           // p, subsample kinds
  std::optional<filters::FilterKernel> kernel;   // filter-subsample
  std::optional<double> alpha;
  std::optional<int> i_prime;
  std::optional<double> delta_prime_target;
  std::optional<int> dft_coefficients;           // k, dft kind (default 20)
  std::uint64_t seed = 0;
};

inline constexpr int kDefaultDftCoefficients = 20;
inline constexpr int kMaxSubsampleAttempts = 16;

Validation validate_config(const MechanismConfig& config);

/// A realized Poisson subsampling draw: the surviving original indices in
/// increasing order, plus the rate that produced them.
struct SubsampleDraw {
  std::vector<std::size_t> indices;
  double sampling_rate = 0.0;
};

/// Noise scale of the Gaussian mechanism: sigma = sqrt(2*ln(1.25/delta)) *
/// l2_sensitivity / epsilon. Requires epsilon in (0, 1).
double gaussian_noise_sigma(double l2_sensitivity, double epsilon,
                            double delta);

/// Keeps each index independently with probability `rate`; returns the draw
/// and the surviving values in index order. Throws EmptySubsample when
/// nothing survives (probability (1-rate)^T, independent of the data).
std::pair<SubsampleDraw, core::Signal> poisson_subsample(
    const core::Signal& x, double rate, random::Rng& rng);

/// Redraws on EmptySubsample with fresh derived seeds, up to
/// kMaxSubsampleAttempts; safe because the draw never looks at the data.
std::pair<SubsampleDraw, core::Signal> poisson_subsample_with_retry(
    const core::Signal& x, double rate, std::uint64_t seed);

/// Expands the surviving samples back to length T: exact pass-through at
/// kept indices, linear interpolation between consecutive kept indices, and
/// nearest-value extrapolation before the first / after the last.
core::Signal interpolate(const SubsampleDraw& draw, const core::Signal& values,
                         std::size_t length);

/// Plain Gaussian baseline: x + iid N(0, sigma^2) per step with sensitivity
/// sqrt(I).
core::Signal gaussian_mechanism(const core::CountSeries& x,
                                const MechanismConfig& config,
                                random::NoiseSource* noise_override = nullptr);

/// Fourier baseline: perturbs the k lowest frequencies of the orthonormal
/// DFT (conjugate pairs kept together so the output stays real), zeroes the
/// rest, and inverse-transforms.
core::Signal dft_mechanism(const core::CountSeries& x,
                           const MechanismConfig& config,
                           random::NoiseSource* noise_override = nullptr);

/// Parameters fixed during a release; echoed in result metadata so any
/// release can be re-derived from its sidecar.
struct ResolvedParams {
  double noise_multiplier = 0.0;  // the Delta_2 the noise was calibrated to
  double sigma = 0.0;
  double base_delta = 0.0;
  double delta_prime = 0.0;
  std::optional<double> alpha;
  std::optional<int> i_prime;
};

struct ReleaseResult {
  core::Signal output;
  accounting::PrivacyGuarantee guarantee;
  ResolvedParams resolved;
};

/// Runs the configured mechanism end to end (filter -> subsample -> noise ->
/// interpolate for the subsampling kinds) and composes the certified
/// guarantee. Deterministic given (input, config, seed).
ReleaseResult release(const core::CountSeries& x, const MechanismConfig& config,
                      random::NoiseSource* noise_override = nullptr);

}  // namespace dpts::mechanisms
