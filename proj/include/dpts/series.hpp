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
#include <vector>

#include "dpts/common.hpp"

namespace dpts::core {

/// A length-T count time-series. Values are stored as doubles even for
/// integer counts so filtered and noised outputs reuse the same buffer type;
/// the integer invariant is only enforced at ingestion boundaries.
struct CountSeries {
  std::vector<double> values;
  double period_seconds = 1.0;
  std::int64_t origin_epoch_seconds = 0;

  std::size_t size() const { return values.size(); }
};

/// A real-valued signal, possibly shorter than the series it came from.
/// `index_map` is present after subsampling and holds the original time
/// indices of the surviving samples, strictly increasing.
struct Signal {
  std::vector<double> values;
  std::optional<std::vector<std::size_t>> index_map;

  std::size_t size() const { return values.size(); }
};

/// Participation bound: one individual contributes to at most `max_steps`
/// distinct time steps, at most `max_per_step` times each.
struct ParticipationLimit {
  int max_steps = 1;
  int max_per_step = 1;
};

/// Checks the CountSeries invariants and reports the first violation:
/// nonempty, all values nonnegative, and (for ingested data, when
/// `require_integer_counts` is set) integer-valued.
Validation validate_series(const CountSeries& series,
                           bool require_integer_counts = false);

Validation validate_signal(const Signal& signal);

Validation validate_participation(const ParticipationLimit& limit,
                                  const CountSeries& series);

/// Keeps every (1/f)-th sample starting at index 0. `f` must be the
/// reciprocal of a positive integer; the sampling period grows by that
/// stride and the new length is ceil(T * f).
CountSeries decimate(const CountSeries& series, double relative_frequency);

}  // namespace dpts::core
