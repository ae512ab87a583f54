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

#include <complex>
#include <span>
#include <vector>

namespace dpts::fft {

/// In-place DFT of arbitrary length. Forward computes
/// X_k = sum_t x_t exp(-2*pi*i*k*t/n); inverse applies the conjugate kernel
/// and divides by n, so inverse(forward(x)) == x up to rounding.
/// Power-of-two lengths use iterative radix-2; everything else goes through
/// Bluestein's chirp-z reduction to a power-of-two convolution.
void transform(std::vector<std::complex<double>>& data, bool inverse);

/// Forward DFT of a real signal (unscaled).
std::vector<std::complex<double>> forward_real(std::span<const double> x);

/// Circular convolution of two equal-length real signals via the frequency
/// domain.
std::vector<double> circular_convolve(std::span<const double> x,
                                      std::span<const double> h);

}  // namespace dpts::fft
