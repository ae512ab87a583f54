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

#include "dpts/harness.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "dpts/sensitivity.hpp"

using namespace dpts;
using mechanisms::MechanismKind;

namespace {

core::CountSeries small_series(std::size_t n) {
  core::CountSeries s;
  s.values.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    s.values[t] = 40.0 + 10.0 * std::sin(0.2 * static_cast<double>(t));
  }
  return s;
}

std::string temp_path(const std::string& tag) {
  return (std::filesystem::temp_directory_path() /
          ("dpts_harness_" + tag + "_" + std::to_string(::getpid()) + ".csv"))
      .string();
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("mae of identical signals is zero") {
  const std::vector<double> x{1.0, 2.0, 3.0};
  CHECK(harness::mae(x, x) == 0.0);
}

TEST_CASE("mae averages absolute deviations") {
  CHECK(harness::mae(std::vector<double>{0.0, 0.0},
                     std::vector<double>{1.0, -1.0}) == doctest::Approx(1.0));
  CHECK(harness::mae(std::vector<double>{1.0, 2.0, 3.0},
                     std::vector<double>{2.0, 2.0, 2.0}) ==
        doctest::Approx(2.0 / 3.0));
}

TEST_CASE("mae rejects mismatched lengths") {
  CHECK_THROWS_AS(
      harness::mae(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
      Error);
}

TEST_CASE("a fully degenerate pipeline scores zero error") {
  const auto input = small_series(40);
  const core::Signal reference{input.values, std::nullopt};
  mechanisms::MechanismConfig cfg;
  cfg.kind = MechanismKind::subsample;
  cfg.epsilon = 0.5;
  cfg.delta = 1e-4;
  cfg.participation = 5;
  cfg.sampling_rate = 1.0;
  cfg.i_prime = 5;
  random::ZeroNoise zero;
  const auto result =
      harness::run_experiment(input, reference, cfg, 1, 3, 1, &zero);
  CHECK(result.mean_mae == 0.0);
  CHECK(result.std_mae == 0.0);
  CHECK(result.maes.size() == 1);
  CHECK(result.failures == 0);
}

TEST_CASE("experiment results are invariant to the thread count") {
  const auto input = small_series(150);
  const core::Signal reference{input.values, std::nullopt};
  mechanisms::MechanismConfig cfg;
  cfg.kind = MechanismKind::subsample;
  cfg.participation = 15;
  cfg.sampling_rate = 0.3;
  const auto serial =
      harness::run_experiment(input, reference, cfg, 24, 11, 1);
  const auto parallel =
      harness::run_experiment(input, reference, cfg, 24, 11, 4);
  CHECK(serial.maes == parallel.maes);  // byte-identical per repeat
  CHECK(serial.mean_mae == parallel.mean_mae);
  CHECK(serial.std_mae == parallel.std_mae);
}

TEST_CASE("summary statistics match the collected maes") {
  const auto input = small_series(100);
  const core::Signal reference{input.values, std::nullopt};
  mechanisms::MechanismConfig cfg;
  cfg.kind = MechanismKind::gaussian;
  cfg.participation = 4;
  const auto result = harness::run_experiment(input, reference, cfg, 50, 5);
  REQUIRE(result.maes.size() == 50);
  double mean = 0.0;
  for (double m : result.maes) mean += m;
  mean /= 50.0;
  CHECK(result.mean_mae == doctest::Approx(mean).epsilon(1e-12));
  double variance = 0.0;
  for (double m : result.maes) variance += (m - mean) * (m - mean);
  CHECK(result.std_mae ==
        doctest::Approx(std::sqrt(variance / 50.0)).epsilon(1e-12));
}

TEST_CASE("schedules reproduce the documented base-2 values") {
  harness::FrequencySweepOptions options;
  CHECK(harness::schedule_rate(1.0, options) == doctest::Approx(0.1));
  CHECK(harness::schedule_sigma_g(1.0, options) == doctest::Approx(10.0));
  CHECK(harness::schedule_rate(1.0 / 64.0, options) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(harness::schedule_sigma_g(1.0 / 64.0, options) ==
        doctest::Approx(4.0).epsilon(1e-12));

  options.log_base = harness::LogBase::natural;
  CHECK(harness::schedule_rate(1.0, options) == doctest::Approx(0.1));
  CHECK(harness::schedule_rate(1.0 / 64.0, options) ==
        doctest::Approx(0.1 * (1.0 + std::log(64.0) / 4.0)).epsilon(1e-12));
}

TEST_CASE("frequency sweep emits one row per cell") {
  harness::FrequencySweepOptions options;
  options.synth.base_length = 160;
  options.synth.participation = 12;
  options.frequencies = {1.0, 0.5};
  options.kinds = {MechanismKind::gaussian, MechanismKind::subsample};
  options.repeats = 3;
  options.master_seed = 21;
  options.threads = 2;
  const auto cells = harness::sweep_frequency(options);
  REQUIRE(cells.size() == 2 * 2 * 2);  // f x {clean, noisy} x mechanism
  for (const auto& cell : cells) {
    CHECK(cell.result.maes.size() == 3);
    CHECK(cell.result.failures == 0);
    CHECK(cell.result.guarantee.delta_total <= options.delta + 1e-18);
  }

  const auto path = temp_path("freq");
  harness::write_frequency_csv(cells, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "mechanism,f,noisy,p,sigma_g,alpha,I,I_prime,delta_prime,"
        "epsilon_total,delta_total,mean_mae,std_mae,repeats,seed");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == cells.size());
  std::remove(path.c_str());
}

TEST_CASE("sweep results are reproducible across runs") {
  harness::FrequencySweepOptions options;
  options.synth.base_length = 120;
  options.synth.participation = 10;
  options.frequencies = {1.0};
  options.kinds = {MechanismKind::subsample};
  options.repeats = 4;
  options.master_seed = 99;
  const auto a = harness::sweep_frequency(options);
  options.threads = 2;
  const auto b = harness::sweep_frequency(options);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].result.maes == b[i].result.maes);
  }
}

TEST_CASE("alpha sweep marks infeasible points and decreases in alpha") {
  const filters::FilterStats stats{1.0, 280.0, 0.028};
  const std::vector<double> rates{0.05, 0.1, 0.2};
  std::vector<double> alphas;
  for (int i = 0; i <= 15; ++i) alphas.push_back(std::min(1.0, 0.25 + 0.05 * i));
  const auto points = harness::sweep_alpha(stats, rates, alphas);
  REQUIRE(points.size() == rates.size() * alphas.size());

  for (const auto& point : points) {
    if (point.alpha * point.alpha < point.rate) {
      CHECK_FALSE(point.delta_prime.has_value());
    } else {
      REQUIRE(point.delta_prime.has_value());
      CHECK(*point.delta_prime >= 0.0);
      CHECK(*point.delta_prime <= 1.0);
    }
  }

  // Fixed rate: tail decreases along the alpha grid.
  for (const double rate : rates) {
    double previous = 2.0;
    for (const auto& point : points) {
      if (point.rate != rate || !point.delta_prime) continue;
      CHECK(*point.delta_prime <= previous + 1e-15);
      previous = *point.delta_prime;
    }
  }

  // Fixed alpha: smaller rate gives a smaller tail.
  for (const double alpha : {0.7, 0.9}) {
    std::optional<double> last;
    for (const double rate : rates) {
      const double tail = sensitivity::chernoff_delta(stats, rate, alpha);
      if (last) CHECK(*last <= tail + 1e-15);
      last = tail;
    }
  }

  const auto path = temp_path("alpha");
  harness::write_alpha_csv(points, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,alpha,delta_prime");
  std::remove(path.c_str());
}

TEST_SUITE_END();
