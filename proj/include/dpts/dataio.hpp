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
#include <string>
#include <vector>

#include "dpts/common.hpp"
#include "dpts/filters.hpp"
#include "dpts/series.hpp"

namespace dpts::dataio {

/// Synthetic benchmark signal: amplitude*sin(omega*u) + offset + slope*u on
/// the original grid u, decimated to relative frequency f, with optional
/// observation noise noise_scale*N(0,1) per step. Values are floored at zero
/// so every generated series is a valid count series.
struct SynthConfig {
  double amplitude = 200.0;
  double offset = 500.0;
  double slope = 0.1;
  double omega = 2.0 * 3.14159265358979323846 / 1000.0;
  double noise_scale = 100.0;  // d
  double relative_frequency = 1.0;
  int base_length = 10000;  // T at f = 1
  int participation = 100;  // I, fixed across frequencies
  std::uint64_t seed = 0;
};

struct SynthPair {
  core::CountSeries clean;
  core::CountSeries noisy;
};

/// Deterministic given the seed; the clean series is seed-independent.
SynthPair generate_synth(const SynthConfig& config);

/// A single check-in event from a location service dump.
struct CheckinRecord {
  std::string user_id;
  std::string venue_id;
  std::int64_t timestamp = 0;
};

/// Zero-based positions of the relevant columns in a check-in file. Public
/// corpora disagree on column order, so the mapping is caller-configurable.
struct ColumnMap {
  int user = 0;
  int time = 1;
  int venue = 2;
};

struct CheckinIngest {
  core::CountSeries series;
  /// Max distinct bins one user appears in (after per-bin deduplication).
  int empirical_participation = 0;
  /// Max raw check-in count of one user, without deduplication.
  int empirical_participation_raw = 0;
  /// False when no record matched the venue (the series is then all zeros).
  bool venue_found = false;
  std::size_t parsed_records = 0;
  std::size_t matched_records = 0;
  std::size_t deduplicated_records = 0;
};

/// Parses epoch seconds or ISO-8601 (date, or date + time, optional
/// fractional seconds and Z / +-HH:MM offset) into epoch seconds UTC.
std::int64_t parse_timestamp(const std::string& text);

/// Bins the venue's check-ins into ceil((t_end - t_start)/bin_seconds) steps
/// over [t_start, t_end). Multiple check-ins by one user within a bin count
/// once when `dedup_per_bin` is set (the default), matching the
/// one-contribution-per-step participation model.
CheckinIngest ingest_checkins(const std::string& path,
                              const std::string& venue_id, double bin_seconds,
                              std::int64_t t_start, std::int64_t t_end,
                              const ColumnMap& columns = {},
                              bool dedup_per_bin = true);

/// Reads a `t,value` CSV with contiguous t from 0 into a validated count
/// series. Raw count data must be integer-valued; pass false to accept
/// real-valued series (synthetic or filtered signals written by this
/// toolkit).
core::CountSeries ingest_series(const std::string& path,
                                bool require_integer_counts = true);

/// Writes `t,value` rows with full double precision so write/read round
/// trips are exact.
void write_series(const std::vector<double>& values, const std::string& path);

/// Writes a kernel as `k,h_k` rows for inspection.
void write_kernel(const filters::FilterKernel& kernel, const std::string& path);

}  // namespace dpts::dataio
