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

#include <span>
#include <vector>

#include "dpts/common.hpp"
#include "dpts/series.hpp"

namespace dpts::filters {

/// Circular convolution kernel h of length T. Entries are nonnegative and
/// l1-normalized, which pins the spectral norm of the induced circulant
/// matrix at exactly 1.
struct FilterKernel {
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
};

/// Spectral statistics of the circulant filter matrix A built from a kernel:
///   sigma_max       largest singular value (max DFT magnitude of h),
///   srank           stable rank ||A||_F^2 / ||A||^2 = T*||h||_2^2 / sigma_max^2,
///   max_row_norm_sq max squared l2 row norm, equal to ||h||_2^2 for a
///                   circulant since all rows are rotations of h.
struct FilterStats {
  double sigma_max = 0.0;
  double srank = 0.0;
  double max_row_norm_sq = 0.0;
};

/// Builds a kernel from nonnegative weights, normalizing to unit l1 norm.
FilterKernel make_kernel(std::vector<double> weights);

/// Circular Gaussian bump of width sigma_g centered at lag 0:
///   w_t = exp(-((T/2 - |t - T/2|) / sigma_g)^2 / 2), then l1-normalized.
/// Symmetric under t <-> (T - t) mod T.
FilterKernel gaussian_kernel(std::size_t length, double sigma_g);

/// Kernel [1, 0, ..., 0]; the induced filter is the identity matrix.
FilterKernel identity_kernel(std::size_t length);

bool is_identity_kernel(const FilterKernel& kernel);

FilterStats filter_stats(const FilterKernel& kernel);

/// Circular convolution of x with the kernel. Computed in the frequency
/// domain; the identity kernel short-circuits to an exact copy.
std::vector<double> apply_filter(const FilterKernel& kernel,
                                 std::span<const double> x);

core::Signal apply_filter(const FilterKernel& kernel, const core::Signal& x);

}  // namespace dpts::filters
