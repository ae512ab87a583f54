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
#include <span>
#include <string>
#include <vector>

#include "dpts/dataio.hpp"
#include "dpts/mechanisms.hpp"

namespace dpts::harness {

/// Mean absolute error between a reference signal and a mechanism output.
double mae(std::span<const double> reference, std::span<const double> output);

/// Aggregate of `repeats` independent mechanism runs. `maes` has one entry
/// per repeat (NaN for a failed repeat, recorded in `repeat_errors`);
/// mean/std are over the successful repeats, std is the population standard
/// deviation.
struct ExperimentResult {
  std::vector<double> maes;
  double mean_mae = 0.0;
  double std_mae = 0.0;
  mechanisms::MechanismConfig config;  // echo, seed set to the master seed
  mechanisms::ResolvedParams resolved;
  accounting::PrivacyGuarantee guarantee;
  std::vector<std::string> repeat_errors;  // empty string == success
  int failures = 0;
  std::uint64_t master_seed = 0;
};

/// Runs the mechanism `repeats` times with per-repeat seeds derived from the
/// master seed. Results are independent of `threads` (0 = hardware
/// concurrency): repeats are keyed by index, not by execution order.
/// `noise_override` is a test hook; it must be stateless since repeats may
/// run concurrently.
ExperimentResult run_experiment(const core::CountSeries& input,
                                const core::Signal& reference,
                                const mechanisms::MechanismConfig& config,
                                int repeats, std::uint64_t master_seed,
                                int threads = 0,
                                random::NoiseSource* noise_override = nullptr);

enum class LogBase { two, natural };

/// Frequency sweep: for each relative frequency f, generates the synthetic
/// pair and runs every mechanism on the clean and/or noisy input against the
/// clean reference, with schedules
///   rate(f)    = base_rate * (1 - log(f)/schedule_divisor)
///   sigma_g(f) = base_sigma_g / (1 - log(f)/schedule_divisor).
struct FrequencySweepOptions {
  dataio::SynthConfig synth;
  std::vector<double> frequencies = {1.0, 0.5, 0.25, 0.125};
  std::vector<mechanisms::MechanismKind> kinds = {
      mechanisms::MechanismKind::gaussian, mechanisms::MechanismKind::dft,
      mechanisms::MechanismKind::subsample,
      mechanisms::MechanismKind::filter_subsample};
  double epsilon = 0.5;
  double delta = 1e-4;
  int repeats = 100;
  std::uint64_t master_seed = 0;
  LogBase log_base = LogBase::two;
  int dft_coefficients = 20;
  double base_rate = 0.1;
  double base_sigma_g = 10.0;
  double schedule_divisor = 4.0;
  bool include_noiseless = true;
  bool include_noisy = true;
  int threads = 0;
};

double schedule_rate(double frequency, const FrequencySweepOptions& options);
double schedule_sigma_g(double frequency, const FrequencySweepOptions& options);

struct FrequencyCell {
  mechanisms::MechanismKind kind = mechanisms::MechanismKind::gaussian;
  double frequency = 1.0;
  bool noisy = false;
  double rate = 0.0;
  double sigma_g = 0.0;
  ExperimentResult result;
};

std::vector<FrequencyCell> sweep_frequency(const FrequencySweepOptions& options);

/// Chernoff tail over a (rate, alpha) grid; infeasible points (alpha^2 <
/// rate) carry no value.
struct AlphaSweepPoint {
  double rate = 0.0;
  double alpha = 0.0;
  std::optional<double> delta_prime;
};

std::vector<AlphaSweepPoint> sweep_alpha(const filters::FilterStats& stats,
                                         const std::vector<double>& rates,
                                         const std::vector<double>& alphas);

void write_frequency_csv(const std::vector<FrequencyCell>& cells,
                         const std::string& path);
void write_alpha_csv(const std::vector<AlphaSweepPoint>& points,
                     const std::string& path);

}  // namespace dpts::harness
