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

#include "dpts/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dpts::fft {
namespace {

using cdouble = std::complex<double>;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// Iterative radix-2 Cooley-Tukey; n must be a power of two.
void radix2(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const cdouble wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      cdouble w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cdouble u = a[i + k];
        const cdouble v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Bluestein's algorithm: expresses an arbitrary-length DFT as a circular
// convolution with a chirp, evaluated at a padded power-of-two length.
// The chirp phase uses (t*t mod 2n) so the angle stays small for large t.
void bluestein(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  const std::size_t m = next_pow2(2 * n - 1);
  const double sign = inverse ? 1.0 : -1.0;

  std::vector<cdouble> chirp(n);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t t2 = (t * t) % (2 * n);
    const double angle =
        sign * std::numbers::pi * static_cast<double>(t2) / static_cast<double>(n);
    chirp[t] = cdouble(std::cos(angle), std::sin(angle));
  }

  std::vector<cdouble> u(m, cdouble(0.0, 0.0));
  std::vector<cdouble> v(m, cdouble(0.0, 0.0));
  for (std::size_t t = 0; t < n; ++t) u[t] = a[t] * chirp[t];
  v[0] = std::conj(chirp[0]);
  for (std::size_t t = 1; t < n; ++t) {
    v[t] = std::conj(chirp[t]);
    v[m - t] = std::conj(chirp[t]);
  }

  radix2(u, false);
  radix2(v, false);
  for (std::size_t t = 0; t < m; ++t) u[t] *= v[t];
  radix2(u, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * scale * chirp[k];
}

}  // namespace

void transform(std::vector<cdouble>& data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0) return;
  if (is_pow2(n)) {
    radix2(data, inverse);
  } else {
    bluestein(data, inverse);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& c : data) c *= scale;
  }
}

std::vector<cdouble> forward_real(std::span<const double> x) {
  std::vector<cdouble> data(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) data[t] = cdouble(x[t], 0.0);
  transform(data, false);
  return data;
}

std::vector<double> circular_convolve(std::span<const double> x,
                                      std::span<const double> h) {
  if (x.size() != h.size()) {
    throw std::invalid_argument("circular_convolve: length mismatch");
  }
  auto fx = forward_real(x);
  const auto fh = forward_real(h);
  for (std::size_t k = 0; k < fx.size(); ++k) fx[k] *= fh[k];
  transform(fx, true);
  std::vector<double> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) out[t] = fx[t].real();
  return out;
}

}  // namespace dpts::fft
