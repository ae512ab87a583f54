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

#include <random>

#include "doctest.h"
#include "dpts/dataio.hpp"

using namespace dpts;
using core::CountSeries;

TEST_SUITE_BEGIN("series");

TEST_CASE("validate accepts a minimal valid series") {
  CountSeries s{{3.0, 0.0, 5.0}, 1.0, 0};
  CHECK(core::validate_series(s).ok);
  CHECK(core::validate_series(s, true).ok);
}

TEST_CASE("validate rejects an empty series") {
  CountSeries s;
  const auto v = core::validate_series(s);
  REQUIRE_FALSE(v.ok);
  CHECK(v.code == ErrorCode::empty_series);
}

TEST_CASE("validate rejects negative values") {
  CountSeries s{{1.0, -2.0}, 1.0, 0};
  const auto v = core::validate_series(s);
  REQUIRE_FALSE(v.ok);
  CHECK(v.code == ErrorCode::negative_value);
}

TEST_CASE("integer check applies only when requested") {
  CountSeries s{{1.5, 2.0}, 1.0, 0};
  CHECK(core::validate_series(s).ok);
  const auto strict = core::validate_series(s, true);
  REQUIRE_FALSE(strict.ok);
  CHECK(strict.code == ErrorCode::non_integer_count);
}

TEST_CASE("decimate keeps every stride-th sample") {
  CountSeries s{{0, 1, 2, 3, 4, 5, 6, 7}, 1.0, 0};
  const auto half = core::decimate(s, 0.5);
  CHECK(half.values == std::vector<double>{0, 2, 4, 6});
  CHECK(half.period_seconds == doctest::Approx(2.0));
}

TEST_CASE("decimate at f=1 is the identity") {
  CountSeries s{{0, 1, 2, 3}, 1.0, 0};
  CHECK(core::decimate(s, 1.0).values == s.values);
}

TEST_CASE("decimate rejects non-integer strides") {
  CountSeries s{{0, 1, 2}, 1.0, 0};
  CHECK_THROWS_WITH_AS(core::decimate(s, 0.3), doctest::Contains("integer"),
                       Error);
}

TEST_CASE("decimate handles strides that are not powers of two") {
  CountSeries s{{0, 1, 2, 3, 4, 5, 6}, 1.0, 0};
  // 1/(1/3) lands on 3 only up to floating rounding.
  CHECK(core::decimate(s, 1.0 / 3.0).values == std::vector<double>{0, 3, 6});
  CHECK(core::decimate(s, 1.0 / 7.0).values == std::vector<double>{0});
}

TEST_CASE("decimated synth length matches ceil(T*f)") {
  dataio::SynthConfig cfg;
  cfg.base_length = 10000;
  cfg.relative_frequency = 1.0 / 64.0;
  const auto pair = dataio::generate_synth(cfg);
  CHECK(pair.clean.size() == 157);

  // Same thing via decimating the full-rate signal.
  dataio::SynthConfig full = cfg;
  full.relative_frequency = 1.0;
  const auto base = dataio::generate_synth(full);
  const auto decimated = core::decimate(base.clean, 1.0 / 64.0);
  CHECK(decimated.size() == 157);
  for (std::size_t t = 0; t < decimated.size(); ++t) {
    CHECK(decimated.values[t] ==
          doctest::Approx(pair.clean.values[t]).epsilon(1e-12));
  }
}

TEST_CASE("decimation composes: f=1/a then f=1/b equals f=1/(a*b)") {
  std::mt19937_64 rng(7);
  std::vector<double> values(120);
  for (auto& v : values) v = static_cast<double>(rng() % 50);
  CountSeries s{values, 1.0, 0};
  for (const auto& [a, b] : {std::pair{2, 3}, {4, 2}, {5, 4}}) {
    const auto two_step =
        core::decimate(core::decimate(s, 1.0 / a), 1.0 / b);
    const auto one_step = core::decimate(s, 1.0 / (a * b));
    CHECK(two_step.values == one_step.values);
  }
}

TEST_CASE("participation limit must fit the series") {
  CountSeries s{{1, 2, 3}, 1.0, 0};
  CHECK(core::validate_participation({3, 1}, s).ok);
  CHECK_FALSE(core::validate_participation({4, 1}, s).ok);
  CHECK_FALSE(core::validate_participation({1, 0}, s).ok);
}

TEST_SUITE_END();
