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

#include "dpts/series.hpp"

#include <cmath>
#include <string>

namespace dpts::core {

Validation validate_series(const CountSeries& series,
                           bool require_integer_counts) {
  if (series.values.empty()) {
    return Validation::fail(ErrorCode::empty_series, "series has length 0");
  }
  for (std::size_t t = 0; t < series.values.size(); ++t) {
    const double v = series.values[t];
    if (!(v >= 0.0)) {  // also rejects NaN
      return Validation::fail(
          ErrorCode::negative_value,
          "value at t=" + std::to_string(t) + " is negative or NaN");
    }
    if (require_integer_counts && v != std::floor(v)) {
      return Validation::fail(
          ErrorCode::non_integer_count,
          "value at t=" + std::to_string(t) + " is not an integer count");
    }
  }
  if (!(series.period_seconds > 0.0)) {
    return Validation::fail(ErrorCode::invalid_params,
                            "sampling period must be positive");
  }
  return Validation::pass();
}

Validation validate_signal(const Signal& signal) {
  if (signal.values.empty()) {
    return Validation::fail(ErrorCode::empty_series, "signal has length 0");
  }
  if (signal.index_map) {
    const auto& map = *signal.index_map;
    if (map.size() != signal.values.size()) {
      return Validation::fail(ErrorCode::length_mismatch,
                              "index_map length differs from values length");
    }
    for (std::size_t i = 1; i < map.size(); ++i) {
      if (map[i] <= map[i - 1]) {
        return Validation::fail(ErrorCode::invalid_params,
                                "index_map is not strictly increasing");
      }
    }
  }
  return Validation::pass();
}

Validation validate_participation(const ParticipationLimit& limit,
                                  const CountSeries& series) {
  if (limit.max_steps < 1) {
    return Validation::fail(ErrorCode::invalid_params,
                            "participation limit must be positive");
  }
  if (limit.max_per_step < 1) {
    return Validation::fail(ErrorCode::invalid_params,
                            "per-step participation must be at least 1");
  }
  if (static_cast<std::size_t>(limit.max_steps) > series.size()) {
    return Validation::fail(
        ErrorCode::invalid_params,
        "participation limit exceeds the series length");
  }
  return Validation::pass();
}

CountSeries decimate(const CountSeries& series, double relative_frequency) {
  if (!(relative_frequency > 0.0) || relative_frequency > 1.0) {
    throw Error(ErrorCode::invalid_params,
                "relative frequency must lie in (0, 1]");
  }
  const double stride_real = 1.0 / relative_frequency;
  const auto stride = static_cast<std::size_t>(std::llround(stride_real));
  if (std::abs(stride_real - static_cast<double>(stride)) > 1e-9 ||
      stride == 0) {
    throw Error(ErrorCode::non_integer_stride,
                "1/f must be a positive integer");
  }
  CountSeries out;
  out.period_seconds = series.period_seconds * static_cast<double>(stride);
  out.origin_epoch_seconds = series.origin_epoch_seconds;
  out.values.reserve((series.size() + stride - 1) / stride);
  for (std::size_t t = 0; t < series.size(); t += stride) {
    out.values.push_back(series.values[t]);
  }
  return out;
}

}  // namespace dpts::core
