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

#include "dpts/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "dpts/random.hpp"

namespace dpts::dataio {
namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

std::vector<std::string> split_fields(const std::string& line) {
  const char delimiter = line.find('\t') != std::string::npos ? '\t' : ',';
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, delimiter)) {
    fields.push_back(trim(field));
  }
  return fields;
}

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, int month, int day) {
  year -= month <= 2;
  const std::int64_t era = (year >= 0 ? year : year - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(year - era * 400);
  const unsigned doy =
      (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
      static_cast<unsigned>(day) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097LL + static_cast<std::int64_t>(doe) - 719468LL;
}

void write_double(std::FILE* file, double value) {
  std::fprintf(file, "%.17g", value);
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_for_write(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "w"));
  if (!file) {
    throw Error(ErrorCode::parse_error, "cannot open for writing: " + path);
  }
  return file;
}

}  // namespace

SynthPair generate_synth(const SynthConfig& config) {
  if (config.base_length < 1) {
    throw Error(ErrorCode::invalid_params, "base length must be positive");
  }
  if (!(config.relative_frequency > 0.0) || config.relative_frequency > 1.0) {
    throw Error(ErrorCode::invalid_params,
                "relative frequency must lie in (0, 1]");
  }
  const double stride_real = 1.0 / config.relative_frequency;
  const auto stride = static_cast<std::int64_t>(std::llround(stride_real));
  if (std::abs(stride_real - static_cast<double>(stride)) > 1e-9 ||
      stride < 1) {
    throw Error(ErrorCode::non_integer_stride,
                "1/f must be a positive integer");
  }
  const auto length = static_cast<std::size_t>(
      (config.base_length + stride - 1) / stride);  // ceil(T_base * f)

  SynthPair pair;
  pair.clean.values.reserve(length);
  pair.noisy.values.reserve(length);
  pair.clean.period_seconds = static_cast<double>(stride);
  pair.noisy.period_seconds = static_cast<double>(stride);

  random::Rng rng(random::derive_seed(config.seed, random::kSynthStream));
  for (std::size_t t = 0; t < length; ++t) {
    const double u = static_cast<double>(t) * static_cast<double>(stride);
    const double clean = std::max(
        0.0, config.amplitude * std::sin(config.omega * u) + config.offset +
                 config.slope * u);
    // Observation noise is drawn even when noise_scale == 0 so the clean
    // series stays seed-independent and the noisy one seed-deterministic.
    const double noise = config.noise_scale * rng.gaussian();
    pair.clean.values.push_back(clean);
    pair.noisy.values.push_back(std::max(0.0, clean + noise));
  }
  return pair;
}

std::int64_t parse_timestamp(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) {
    throw Error(ErrorCode::parse_error, "empty timestamp");
  }

  // Epoch seconds.
  if (s.find_first_not_of("0123456789-+") == std::string::npos &&
      s.find('-', 1) == std::string::npos) {
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, "bad epoch timestamp: " + s);
    }
  }

  // ISO-8601: YYYY-MM-DD[{T or space}HH:MM:SS[.frac]][Z|+-HH:MM].
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  int consumed = 0;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2d%n", &year, &month, &day, &consumed) !=
      3) {
    throw Error(ErrorCode::parse_error, "bad timestamp: " + s);
  }
  std::size_t pos = static_cast<std::size_t>(consumed);
  if (pos < s.size() && (s[pos] == 'T' || s[pos] == ' ')) {
    int time_consumed = 0;
    if (std::sscanf(s.c_str() + pos + 1, "%2d:%2d:%2d%n", &hour, &minute,
                    &second, &time_consumed) != 3) {
      throw Error(ErrorCode::parse_error, "bad time of day: " + s);
    }
    pos += 1 + static_cast<std::size_t>(time_consumed);
    if (pos < s.size() && s[pos] == '.') {  // fractional seconds: truncate
      ++pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
    }
  }
  std::int64_t offset_seconds = 0;
  if (pos < s.size()) {
    if (s[pos] == 'Z') {
      ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
      int oh = 0, om = 0;
      if (std::sscanf(s.c_str() + pos + 1, "%2d:%2d", &oh, &om) < 1) {
        throw Error(ErrorCode::parse_error, "bad timezone offset: " + s);
      }
      offset_seconds = (s[pos] == '+' ? 1 : -1) * (oh * 3600LL + om * 60LL);
      pos = s.size();
    }
  }
  if (pos != s.size()) {
    throw Error(ErrorCode::parse_error, "trailing characters in timestamp: " + s);
  }
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    throw Error(ErrorCode::parse_error, "timestamp out of range: " + s);
  }
  return days_from_civil(year, month, day) * 86400LL + hour * 3600LL +
         minute * 60LL + second - offset_seconds;
}

CheckinIngest ingest_checkins(const std::string& path,
                              const std::string& venue_id, double bin_seconds,
                              std::int64_t t_start, std::int64_t t_end,
                              const ColumnMap& columns, bool dedup_per_bin) {
  if (!(bin_seconds > 0.0)) {
    throw Error(ErrorCode::invalid_params, "bin size must be positive");
  }
  if (t_end <= t_start) {
    throw Error(ErrorCode::invalid_params, "time window is empty");
  }
  std::ifstream input(path);
  if (!input) {
    throw Error(ErrorCode::parse_error, "cannot open " + path);
  }

  const double window = static_cast<double>(t_end - t_start);
  const auto bins =
      static_cast<std::size_t>(std::ceil(window / bin_seconds));
  const int max_column =
      std::max({columns.user, columns.time, columns.venue});

  CheckinIngest out;
  out.series.values.assign(bins, 0.0);
  out.series.period_seconds = bin_seconds;
  out.series.origin_epoch_seconds = t_start;

  // user -> bins participated in (dedup) and raw record count.
  std::unordered_map<std::string, std::set<std::size_t>> user_bins;
  std::unordered_map<std::string, int> user_raw;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() <= static_cast<std::size_t>(max_column)) {
      throw Error(ErrorCode::parse_error,
                  path + ":" + std::to_string(line_number) +
                      ": expected at least " + std::to_string(max_column + 1) +
                      " columns, got " + std::to_string(fields.size()));
    }
    std::int64_t timestamp = 0;
    try {
      timestamp = parse_timestamp(fields[static_cast<std::size_t>(columns.time)]);
    } catch (const Error&) {
      if (line_number == 1) continue;  // tolerate a header row
      throw Error(ErrorCode::parse_error,
                  path + ":" + std::to_string(line_number) +
                      ": bad timestamp '" +
                      fields[static_cast<std::size_t>(columns.time)] + "'");
    }
    ++out.parsed_records;
    if (fields[static_cast<std::size_t>(columns.venue)] != venue_id) continue;
    if (timestamp < t_start || timestamp >= t_end) continue;
    ++out.matched_records;

    const auto bin = static_cast<std::size_t>(
        static_cast<double>(timestamp - t_start) / bin_seconds);
    const std::string& user = fields[static_cast<std::size_t>(columns.user)];
    ++user_raw[user];
    const bool first_in_bin = user_bins[user].insert(bin).second;
    if (first_in_bin || !dedup_per_bin) {
      out.series.values[bin] += 1.0;
      ++out.deduplicated_records;
    }
  }

  out.venue_found = out.matched_records > 0;
  for (const auto& [user, bins_hit] : user_bins) {
    out.empirical_participation = std::max(
        out.empirical_participation, static_cast<int>(bins_hit.size()));
    out.empirical_participation_raw =
        std::max(out.empirical_participation_raw, user_raw[user]);
  }
  return out;
}

core::CountSeries ingest_series(const std::string& path,
                                bool require_integer_counts) {
  std::ifstream input(path);
  if (!input) {
    throw Error(ErrorCode::parse_error, "cannot open " + path);
  }
  core::CountSeries series;
  std::string line;
  std::size_t line_number = 0;
  std::size_t expected_index = 0;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line_number == 1 && line.find_first_not_of("tvalue, ") ==
                                std::string::npos) {
      continue;  // header row "t,value"
    }
    long long index = 0;
    double value = 0.0;
    if (std::sscanf(line.c_str(), "%lld,%lf", &index, &value) != 2) {
      throw Error(ErrorCode::parse_error,
                  path + ":" + std::to_string(line_number) +
                      ": expected 't,value', got '" + line + "'");
    }
    if (index != static_cast<long long>(expected_index)) {
      throw Error(ErrorCode::gap_in_index,
                  path + ":" + std::to_string(line_number) + ": expected t=" +
                      std::to_string(expected_index) + ", got t=" +
                      std::to_string(index));
    }
    series.values.push_back(value);
    ++expected_index;
  }
  const auto validation = core::validate_series(series, require_integer_counts);
  if (!validation.ok) {
    throw Error(validation.code, path + ": " + validation.message);
  }
  return series;
}

void write_series(const std::vector<double>& values, const std::string& path) {
  auto file = open_for_write(path);
  std::fputs("t,value\n", file.get());
  for (std::size_t t = 0; t < values.size(); ++t) {
    std::fprintf(file.get(), "%zu,", t);
    write_double(file.get(), values[t]);
    std::fputc('\n', file.get());
  }
}

void write_kernel(const filters::FilterKernel& kernel, const std::string& path) {
  auto file = open_for_write(path);
  std::fputs("k,h_k\n", file.get());
  for (std::size_t k = 0; k < kernel.weights.size(); ++k) {
    std::fprintf(file.get(), "%zu,", k);
    write_double(file.get(), kernel.weights[k]);
    std::fputc('\n', file.get());
  }
}

}  // namespace dpts::dataio
