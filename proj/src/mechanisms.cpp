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

#include "dpts/mechanisms.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "dpts/fft.hpp"
#include "dpts/sensitivity.hpp"

namespace dpts::mechanisms {
namespace {

using random::derive_seed;

void require(bool condition, ErrorCode code, const char* message) {
  if (!condition) throw Error(code, message);
}

int multiplier_source_count(const MechanismConfig& c) {
  return static_cast<int>(c.alpha.has_value()) +
         static_cast<int>(c.i_prime.has_value()) +
         static_cast<int>(c.delta_prime_target.has_value());
}

}  // namespace

const char* mechanism_kind_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::gaussian:
      return "gaussian";
    case MechanismKind::dft:
      return "dft";
    case MechanismKind::subsample:
      return "subsample";
    case MechanismKind::filter_subsample:
      return "filter-subsample";
  }
  return "unknown";
}

MechanismKind mechanism_kind_from_name(const std::string& name) {
  if (name == "gaussian") return MechanismKind::gaussian;
  if (name == "dft") return MechanismKind::dft;
  if (name == "subsample") return MechanismKind::subsample;
  if (name == "filter-subsample" || name == "filter_subsample") {
    return MechanismKind::filter_subsample;
  }
  throw Error(ErrorCode::invalid_config, "unknown mechanism: " + name);
}

Validation validate_config(const MechanismConfig& c) {
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) {
    return Validation::fail(ErrorCode::invalid_epsilon,
                            "epsilon must lie in (0, 1)");
  }
  if (!(c.delta > 0.0 && c.delta < 1.0)) {
    return Validation::fail(ErrorCode::invalid_params,
                            "delta must lie in (0, 1)");
  }
  if (c.participation < 1) {
    return Validation::fail(ErrorCode::invalid_params,
                            "participation limit must be positive");
  }

  const bool subsampled = c.kind == MechanismKind::subsample ||
                          c.kind == MechanismKind::filter_subsample;
  if (subsampled) {
    if (!c.sampling_rate || !(*c.sampling_rate > 0.0) ||
        *c.sampling_rate > 1.0) {
      return Validation::fail(ErrorCode::invalid_params,
                              "sampling rate must be set in (0, 1]");
    }
    if (multiplier_source_count(c) > 1) {
      return Validation::fail(
          ErrorCode::invalid_config,
          "set at most one of alpha / i_prime / delta_prime_target");
    }
    if (c.dft_coefficients) {
      return Validation::fail(ErrorCode::invalid_config,
                              "dft_coefficients is only for the dft kind");
    }
  } else {
    if (c.sampling_rate || c.kernel || multiplier_source_count(c) > 0) {
      return Validation::fail(
          ErrorCode::invalid_config,
          "subsampling fields are not valid for this mechanism kind");
    }
  }

  if (c.kind == MechanismKind::filter_subsample) {
    if (!c.kernel) {
      return Validation::fail(ErrorCode::invalid_config,
                              "filter-subsample requires a kernel");
    }
    if (c.i_prime) {
      return Validation::fail(
          ErrorCode::invalid_config,
          "i_prime applies to the unfiltered subsample kind only");
    }
  } else if (c.kind == MechanismKind::subsample && c.kernel) {
    return Validation::fail(ErrorCode::invalid_config,
                            "kernel is only for the filter-subsample kind");
  }

  if (c.kind != MechanismKind::dft && c.kind != MechanismKind::subsample &&
      c.kind != MechanismKind::filter_subsample &&
      c.kind != MechanismKind::gaussian) {
    return Validation::fail(ErrorCode::invalid_config, "unknown kind");
  }
  if (c.dft_coefficients && c.kind != MechanismKind::dft) {
    return Validation::fail(ErrorCode::invalid_config,
                            "dft_coefficients is only for the dft kind");
  }
  if (c.dft_coefficients && *c.dft_coefficients < 1) {
    return Validation::fail(ErrorCode::invalid_k,
                            "dft coefficient count must be positive");
  }
  return Validation::pass();
}

double gaussian_noise_sigma(double l2_sensitivity, double epsilon,
                            double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::invalid_epsilon, "epsilon must lie in (0, 1)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::invalid_params, "delta must lie in (0, 1)");
  }
  if (!(l2_sensitivity >= 0.0)) {
    throw Error(ErrorCode::invalid_params, "sensitivity must be nonnegative");
  }
  return std::sqrt(2.0 * std::log(1.25 / delta)) * l2_sensitivity / epsilon;
}

std::pair<SubsampleDraw, core::Signal> poisson_subsample(
    const core::Signal& x, double rate, random::Rng& rng) {
  if (!(rate > 0.0) || rate > 1.0) {
    throw Error(ErrorCode::invalid_params,
                "sampling rate must lie in (0, 1]");
  }
  SubsampleDraw draw;
  draw.sampling_rate = rate;
  core::Signal kept;
  for (std::size_t t = 0; t < x.values.size(); ++t) {
    if (rng.bernoulli(rate)) {
      draw.indices.push_back(t);
      kept.values.push_back(x.values[t]);
    }
  }
  if (draw.indices.empty()) {
    throw Error(ErrorCode::empty_subsample,
                "no index survived subsampling; redraw with a fresh seed");
  }
  kept.index_map = draw.indices;
  return {std::move(draw), std::move(kept)};
}

std::pair<SubsampleDraw, core::Signal> poisson_subsample_with_retry(
    const core::Signal& x, double rate, std::uint64_t seed) {
  for (int attempt = 0; attempt < kMaxSubsampleAttempts; ++attempt) {
    random::Rng rng(derive_seed(seed, random::kSubsampleStream,
                                static_cast<std::uint64_t>(attempt)));
    try {
      return poisson_subsample(x, rate, rng);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::empty_subsample ||
          attempt + 1 == kMaxSubsampleAttempts) {
        throw;
      }
    }
  }
  throw Error(ErrorCode::empty_subsample, "unreachable");
}

core::Signal interpolate(const SubsampleDraw& draw, const core::Signal& values,
                         std::size_t length) {
  const auto& idx = draw.indices;
  if (idx.empty()) {
    throw Error(ErrorCode::empty_draw, "cannot interpolate an empty draw");
  }
  if (idx.size() != values.values.size()) {
    throw Error(ErrorCode::length_mismatch,
                "draw and values have different lengths");
  }
  if (idx.back() >= length) {
    throw Error(ErrorCode::invalid_params,
                "draw index exceeds output length");
  }

  core::Signal out;
  out.values.assign(length, 0.0);
  const auto& z = values.values;

  // Constant extrapolation outside [first, last]; exact pass-through at the
  // kept indices keeps the map bijective given the draw.
  for (std::size_t t = 0; t < idx.front(); ++t) out.values[t] = z.front();
  for (std::size_t t = idx.back() + 1; t < length; ++t) {
    out.values[t] = z.back();
  }
  out.values[idx.front()] = z.front();
  for (std::size_t i = 1; i < idx.size(); ++i) {
    out.values[idx[i]] = z[i];
    const std::size_t left = idx[i - 1];
    const std::size_t right = idx[i];
    const double span = static_cast<double>(right - left);
    for (std::size_t t = left + 1; t < right; ++t) {
      const double w = static_cast<double>(t - left) / span;
      out.values[t] = z[i - 1] + (z[i] - z[i - 1]) * w;
    }
  }
  return out;
}

core::Signal gaussian_mechanism(const core::CountSeries& x,
                                const MechanismConfig& config,
                                random::NoiseSource* noise_override) {
  require(config.kind == MechanismKind::gaussian, ErrorCode::invalid_config,
          "config kind must be gaussian");
  const auto validation = validate_config(config);
  if (!validation.ok) throw Error(validation.code, validation.message);

  const double sigma = gaussian_noise_sigma(
      std::sqrt(static_cast<double>(config.participation)), config.epsilon,
      config.delta);
  random::SeededNoise seeded(derive_seed(config.seed, random::kNoiseStream));
  random::NoiseSource& noise = noise_override ? *noise_override : seeded;

  core::Signal out;
  out.values.reserve(x.size());
  for (double v : x.values) out.values.push_back(v + noise.sample(sigma));
  return out;
}

core::Signal dft_mechanism(const core::CountSeries& x,
                           const MechanismConfig& config,
                           random::NoiseSource* noise_override) {
  require(config.kind == MechanismKind::dft, ErrorCode::invalid_config,
          "config kind must be dft");
  const auto validation = validate_config(config);
  if (!validation.ok) throw Error(validation.code, validation.message);

  const std::size_t length = x.size();
  require(length >= 1, ErrorCode::empty_series, "input series is empty");
  const int k = config.dft_coefficients.value_or(kDefaultDftCoefficients);
  if (k < 1 || static_cast<std::size_t>(k) > length) {
    throw Error(ErrorCode::invalid_k,
                "k must lie in [1, T]; got " + std::to_string(k));
  }

  const double sigma = gaussian_noise_sigma(
      std::sqrt(static_cast<double>(config.participation)), config.epsilon,
      config.delta);
  random::SeededNoise seeded(derive_seed(config.seed, random::kNoiseStream));
  random::NoiseSource& noise = noise_override ? *noise_override : seeded;

  // Orthonormal DFT so the transform preserves l2 sensitivity.
  const double root = std::sqrt(static_cast<double>(length));
  std::vector<std::complex<double>> coeff = fft::forward_real(x.values);
  for (auto& c : coeff) c /= root;

  // Perturb DC plus the k-1 next-lowest frequencies; each retained pair
  // (m, T-m) receives conjugate noise so the inverse transform stays real.
  // Per-component noise is sigma in the orthonormal real basis, which is
  // sigma/sqrt(2) on each complex half of a pair.
  coeff[0] += noise.sample(sigma);
  const std::size_t half = length / 2;
  for (std::size_t m = 1; m <= half; ++m) {
    if (m >= static_cast<std::size_t>(k)) break;
    if (2 * m == length) {
      coeff[m] += noise.sample(sigma);  // Nyquist bin is self-conjugate
    } else {
      const std::complex<double> eta(noise.sample(sigma / std::sqrt(2.0)),
                                     noise.sample(sigma / std::sqrt(2.0)));
      coeff[m] += eta;
      coeff[length - m] += std::conj(eta);
    }
  }
  for (std::size_t m = 1; m < length; ++m) {
    const std::size_t freq = std::min(m, length - m);
    if (freq >= static_cast<std::size_t>(k)) coeff[m] = 0.0;
  }

  fft::transform(coeff, true);
  core::Signal out;
  out.values.reserve(length);
  for (const auto& c : coeff) out.values.push_back(c.real() * root);
  return out;
}

namespace {

struct MultiplierChoice {
  double noise_multiplier = 0.0;
  double base_delta = 0.0;
  double delta_prime = 0.0;
  std::optional<double> alpha;
  std::optional<int> i_prime;
};

// Noise multiplier for the subsample kind: sqrt(I') with the surviving cap
// I' backed by the exact binomial tail.
MultiplierChoice resolve_subsample(const MechanismConfig& c) {
  const int participation = c.participation;
  const double rate = *c.sampling_rate;
  MultiplierChoice out;
  out.base_delta = c.delta;

  int cap = 0;
  if (c.i_prime) {
    cap = *c.i_prime;
    if (cap < 1 || cap > participation) {
      throw Error(ErrorCode::invalid_params,
                  "i_prime must lie in [1, participation]");
    }
  } else if (c.alpha) {
    if (!(*c.alpha > 0.0) || *c.alpha > 1.0) {
      throw Error(ErrorCode::invalid_params, "alpha must lie in (0, 1]");
    }
    cap = static_cast<int>(
        std::ceil(*c.alpha * *c.alpha * static_cast<double>(participation)));
    cap = std::max(cap, 1);
  } else if (c.delta_prime_target) {
    cap = std::max(
        1, sensitivity::solve_i_prime(participation, rate, *c.delta_prime_target));
  } else {
    const auto solved =
        accounting::budget_solve(c.epsilon, c.delta, participation, rate);
    out.base_delta = solved.base_delta;
    cap = *solved.i_prime;
  }

  out.i_prime = cap;
  out.delta_prime = sensitivity::binomial_tail_delta(participation, rate, cap);
  out.noise_multiplier = std::sqrt(static_cast<double>(cap));
  return out;
}

// Noise multiplier for the filter-subsample kind: alpha * sqrt(I) with
// alpha backed by the matrix-Chernoff tail.
MultiplierChoice resolve_filter_subsample(const MechanismConfig& c,
                                          const filters::FilterStats& stats) {
  const double rate = *c.sampling_rate;
  MultiplierChoice out;
  out.base_delta = c.delta;

  double alpha = 0.0;
  if (c.alpha) {
    alpha = *c.alpha;
    if (!(alpha > 0.0) || alpha > 1.0) {
      throw Error(ErrorCode::invalid_params, "alpha must lie in (0, 1]");
    }
  } else if (c.delta_prime_target) {
    alpha = sensitivity::solve_alpha(stats, rate, *c.delta_prime_target);
  } else {
    const auto solved = accounting::budget_solve(c.epsilon, c.delta, stats, rate);
    out.base_delta = solved.base_delta;
    alpha = *solved.alpha;
  }

  out.alpha = alpha;
  out.delta_prime = sensitivity::chernoff_delta(stats, rate, alpha);
  out.noise_multiplier =
      alpha * std::sqrt(static_cast<double>(c.participation));
  return out;
}

ReleaseResult release_subsampled(const core::CountSeries& x,
                                 const MechanismConfig& c,
                                 random::NoiseSource* noise_override) {
  const bool filtered = c.kind == MechanismKind::filter_subsample;

  core::Signal working{x.values, std::nullopt};
  MultiplierChoice choice;
  if (filtered) {
    if (c.kernel->size() != x.size()) {
      throw Error(ErrorCode::length_mismatch,
                  "kernel length must equal the series length");
    }
    choice = resolve_filter_subsample(c, filters::filter_stats(*c.kernel));
    working = filters::apply_filter(*c.kernel, working);
  } else {
    choice = resolve_subsample(c);
  }

  auto [draw, kept] =
      poisson_subsample_with_retry(working, *c.sampling_rate, c.seed);

  const double sigma =
      gaussian_noise_sigma(choice.noise_multiplier, c.epsilon, choice.base_delta);
  random::SeededNoise seeded(derive_seed(c.seed, random::kNoiseStream));
  random::NoiseSource& noise = noise_override ? *noise_override : seeded;
  for (double& v : kept.values) v += noise.sample(sigma);

  ReleaseResult result;
  result.output = interpolate(draw, kept, x.size());
  result.resolved.noise_multiplier = choice.noise_multiplier;
  result.resolved.sigma = sigma;
  result.resolved.base_delta = choice.base_delta;
  result.resolved.delta_prime = choice.delta_prime;
  result.resolved.alpha = choice.alpha;
  result.resolved.i_prime = choice.i_prime;
  result.guarantee =
      filtered
          ? accounting::compose_filtered(c.epsilon, choice.base_delta,
                                         *choice.alpha, choice.delta_prime)
          : accounting::compose_unfiltered(c.epsilon, choice.base_delta,
                                           c.participation, *choice.i_prime,
                                           choice.delta_prime);
  return result;
}

}  // namespace

ReleaseResult release(const core::CountSeries& x, const MechanismConfig& config,
                      random::NoiseSource* noise_override) {
  const auto validation = validate_config(config);
  if (!validation.ok) throw Error(validation.code, validation.message);
  const auto series_check = core::validate_series(x);
  if (!series_check.ok) throw Error(series_check.code, series_check.message);

  switch (config.kind) {
    case MechanismKind::gaussian: {
      ReleaseResult result;
      result.output = gaussian_mechanism(x, config, noise_override);
      result.guarantee = accounting::make_direct(config.epsilon, config.delta);
      result.resolved.noise_multiplier =
          std::sqrt(static_cast<double>(config.participation));
      result.resolved.sigma = gaussian_noise_sigma(
          result.resolved.noise_multiplier, config.epsilon, config.delta);
      result.resolved.base_delta = config.delta;
      return result;
    }
    case MechanismKind::dft: {
      ReleaseResult result;
      result.output = dft_mechanism(x, config, noise_override);
      result.guarantee = accounting::make_direct(config.epsilon, config.delta);
      result.resolved.noise_multiplier =
          std::sqrt(static_cast<double>(config.participation));
      result.resolved.sigma = gaussian_noise_sigma(
          result.resolved.noise_multiplier, config.epsilon, config.delta);
      result.resolved.base_delta = config.delta;
      return result;
    }
    case MechanismKind::subsample:
    case MechanismKind::filter_subsample:
      return release_subsampled(x, config, noise_override);
  }
  throw Error(ErrorCode::invalid_config, "unknown mechanism kind");
}

}  // namespace dpts::mechanisms
