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

#include "dpts/filters.hpp"

#include <cmath>
#include <string>

#include "dpts/fft.hpp"

namespace dpts::filters {

FilterKernel make_kernel(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::invalid_params, "kernel must have length >= 1");
  }
  double l1 = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw Error(ErrorCode::invalid_params,
                  "kernel entries must be nonnegative");
    }
    l1 += w;
  }
  if (!(l1 > 0.0)) {
    throw Error(ErrorCode::invalid_params, "kernel must not be all zero");
  }
  for (double& w : weights) w /= l1;
  return FilterKernel{std::move(weights)};
}

FilterKernel gaussian_kernel(std::size_t length, double sigma_g) {
  if (length == 0) {
    throw Error(ErrorCode::invalid_params, "kernel must have length >= 1");
  }
  if (!(sigma_g > 0.0)) {
    throw Error(ErrorCode::invalid_sigma, "sigma_g must be positive");
  }
  const double half = static_cast<double>(length) / 2.0;
  std::vector<double> weights(length);
  for (std::size_t t = 0; t < length; ++t) {
    const double lag = half - std::abs(static_cast<double>(t) - half);
    const double z = lag / sigma_g;
    weights[t] = std::exp(-0.5 * z * z);
  }
  return make_kernel(std::move(weights));
}

FilterKernel identity_kernel(std::size_t length) {
  if (length == 0) {
    throw Error(ErrorCode::invalid_params, "kernel must have length >= 1");
  }
  std::vector<double> weights(length, 0.0);
  weights[0] = 1.0;
  return FilterKernel{std::move(weights)};
}

bool is_identity_kernel(const FilterKernel& kernel) {
  if (kernel.weights.empty() || kernel.weights[0] != 1.0) return false;
  for (std::size_t t = 1; t < kernel.weights.size(); ++t) {
    if (kernel.weights[t] != 0.0) return false;
  }
  return true;
}

FilterStats filter_stats(const FilterKernel& kernel) {
  // Circulant eigenvalues are the DFT of the kernel, so sigma_max is the
  // largest DFT magnitude and ||A||_F^2 = T * ||h||_2^2.
  const auto spectrum = fft::forward_real(kernel.weights);
  double sigma_max_sq = 0.0;
  for (const auto& lambda : spectrum) {
    sigma_max_sq = std::max(sigma_max_sq, std::norm(lambda));
  }
  double l2_sq = 0.0;
  for (double w : kernel.weights) l2_sq += w * w;

  FilterStats stats;
  stats.sigma_max = std::sqrt(sigma_max_sq);
  stats.max_row_norm_sq = l2_sq;
  stats.srank =
      static_cast<double>(kernel.size()) * l2_sq / sigma_max_sq;
  return stats;
}

std::vector<double> apply_filter(const FilterKernel& kernel,
                                 std::span<const double> x) {
  if (kernel.size() != x.size()) {
    throw Error(ErrorCode::length_mismatch,
                "kernel length " + std::to_string(kernel.size()) +
                    " != signal length " + std::to_string(x.size()));
  }
  if (is_identity_kernel(kernel)) {
    return std::vector<double>(x.begin(), x.end());
  }
  return fft::circular_convolve(x, kernel.weights);
}

core::Signal apply_filter(const FilterKernel& kernel, const core::Signal& x) {
  core::Signal out;
  out.values = apply_filter(kernel, std::span<const double>(x.values));
  return out;
}

}  // namespace dpts::filters
