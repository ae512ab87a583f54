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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <thread>

#include "dpts/random.hpp"
#include "dpts/sensitivity.hpp"

namespace dpts::harness {
namespace {

double log_of(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

// One cell index per (frequency, noisy, mechanism) triple so cell seeds stay
// stable when the mechanism list is reordered.
std::uint64_t cell_tag(std::size_t f_index, bool noisy,
                       mechanisms::MechanismKind kind) {
  return (static_cast<std::uint64_t>(f_index) << 16) |
         (static_cast<std::uint64_t>(noisy) << 8) |
         static_cast<std::uint64_t>(kind);
}

}  // namespace

double mae(std::span<const double> reference, std::span<const double> output) {
  if (reference.size() != output.size()) {
    throw Error(ErrorCode::length_mismatch,
                "reference and output lengths differ");
  }
  if (reference.empty()) {
    throw Error(ErrorCode::empty_series, "cannot score empty signals");
  }
  double total = 0.0;
  for (std::size_t t = 0; t < reference.size(); ++t) {
    total += std::abs(reference[t] - output[t]);
  }
  return total / static_cast<double>(reference.size());
}

ExperimentResult run_experiment(const core::CountSeries& input,
                                const core::Signal& reference,
                                const mechanisms::MechanismConfig& config,
                                int repeats, std::uint64_t master_seed,
                                int threads,
                                random::NoiseSource* noise_override) {
  if (repeats < 1) {
    throw Error(ErrorCode::invalid_params, "repeats must be positive");
  }
  if (reference.size() != input.size()) {
    throw Error(ErrorCode::length_mismatch,
                "reference length must equal the input length");
  }

  ExperimentResult result;
  result.config = config;
  result.config.seed = master_seed;  // echo: per-repeat seeds derive from it
  result.master_seed = master_seed;
  result.maes.assign(static_cast<std::size_t>(repeats),
                     std::numeric_limits<double>::quiet_NaN());
  result.repeat_errors.assign(static_cast<std::size_t>(repeats), "");

  const int worker_count =
      threads > 0 ? threads
                  : std::max(1u, std::thread::hardware_concurrency());

  const auto run_one = [&](int repeat_index) {
    mechanisms::MechanismConfig repeat_config = config;
    repeat_config.seed = random::derive_seed(
        master_seed, random::kRepeatStream,
        static_cast<std::uint64_t>(repeat_index));
    const auto release =
        mechanisms::release(input, repeat_config, noise_override);
    result.maes[static_cast<std::size_t>(repeat_index)] =
        mae(reference.values, release.output.values);
    return release;
  };

  const auto worker = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      try {
        run_one(r);
      } catch (const std::exception& e) {
        result.repeat_errors[static_cast<std::size_t>(r)] = e.what();
      }
    }
  };

  // Repeat 0 runs inline to capture the resolved parameters and guarantee
  // (identical across repeats; only the noise and draw differ).
  try {
    const auto first = run_one(0);
    result.resolved = first.resolved;
    result.guarantee = first.guarantee;
  } catch (const std::exception& e) {
    result.repeat_errors[0] = e.what();
  }

  if (repeats > 1) {
    if (worker_count <= 1) {
      worker(1, repeats);
    } else {
      std::vector<std::future<void>> futures;
      const int span = repeats - 1;
      const int chunks = std::min(worker_count, span);
      for (int chunk = 0; chunk < chunks; ++chunk) {
        const int begin = 1 + span * chunk / chunks;
        const int end = 1 + span * (chunk + 1) / chunks;
        futures.push_back(
            std::async(std::launch::async, worker, begin, end));
      }
      for (auto& f : futures) f.get();
    }
  }

  double sum = 0.0;
  int successes = 0;
  for (std::size_t r = 0; r < result.maes.size(); ++r) {
    if (result.repeat_errors[r].empty()) {
      sum += result.maes[r];
      ++successes;
    } else {
      ++result.failures;
    }
  }
  if (successes > 0) {
    result.mean_mae = sum / successes;
    double variance = 0.0;
    for (std::size_t r = 0; r < result.maes.size(); ++r) {
      if (result.repeat_errors[r].empty()) {
        const double d = result.maes[r] - result.mean_mae;
        variance += d * d;
      }
    }
    result.std_mae = std::sqrt(variance / successes);
  }
  return result;
}

double schedule_rate(double frequency, const FrequencySweepOptions& options) {
  return options.base_rate *
         (1.0 - log_of(frequency, options.log_base) / options.schedule_divisor);
}

double schedule_sigma_g(double frequency,
                        const FrequencySweepOptions& options) {
  return options.base_sigma_g /
         (1.0 - log_of(frequency, options.log_base) / options.schedule_divisor);
}

std::vector<FrequencyCell> sweep_frequency(
    const FrequencySweepOptions& options) {
  std::vector<FrequencyCell> cells;
  for (std::size_t f_index = 0; f_index < options.frequencies.size();
       ++f_index) {
    const double f = options.frequencies[f_index];

    dataio::SynthConfig synth = options.synth;
    synth.relative_frequency = f;
    synth.seed = random::derive_seed(options.master_seed, random::kSynthStream,
                                     f_index);
    const auto pair = dataio::generate_synth(synth);
    const core::Signal reference{pair.clean.values, std::nullopt};

    std::vector<bool> noisy_variants;
    if (options.include_noiseless) noisy_variants.push_back(false);
    if (options.include_noisy) noisy_variants.push_back(true);

    for (const bool noisy : noisy_variants) {
      const core::CountSeries& input = noisy ? pair.noisy : pair.clean;
      for (const auto kind : options.kinds) {
        FrequencyCell cell;
        cell.kind = kind;
        cell.frequency = f;
        cell.noisy = noisy;
        cell.rate = schedule_rate(f, options);
        cell.sigma_g = schedule_sigma_g(f, options);

        mechanisms::MechanismConfig config;
        config.kind = kind;
        config.epsilon = options.epsilon;
        config.delta = options.delta;
        config.participation = options.synth.participation;
        if (kind == mechanisms::MechanismKind::subsample ||
            kind == mechanisms::MechanismKind::filter_subsample) {
          config.sampling_rate = cell.rate;
        }
        if (kind == mechanisms::MechanismKind::filter_subsample) {
          config.kernel =
              filters::gaussian_kernel(input.size(), cell.sigma_g);
        }
        if (kind == mechanisms::MechanismKind::dft) {
          config.dft_coefficients = options.dft_coefficients;
        }

        const std::uint64_t cell_seed = random::derive_seed(
            options.master_seed, random::kCellStream,
            cell_tag(f_index, noisy, kind));
        cell.result = run_experiment(input, reference, config, options.repeats,
                                     cell_seed, options.threads);
        cells.push_back(std::move(cell));
      }
    }
  }
  return cells;
}

std::vector<AlphaSweepPoint> sweep_alpha(const filters::FilterStats& stats,
                                         const std::vector<double>& rates,
                                         const std::vector<double>& alphas) {
  std::vector<AlphaSweepPoint> points;
  points.reserve(rates.size() * alphas.size());
  for (const double rate : rates) {
    for (const double alpha : alphas) {
      AlphaSweepPoint point;
      point.rate = rate;
      point.alpha = alpha;
      if (alpha * alpha >= rate) {
        point.delta_prime = sensitivity::chernoff_delta(stats, rate, alpha);
      }
      points.push_back(point);
    }
  }
  return points;
}

void write_frequency_csv(const std::vector<FrequencyCell>& cells,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::parse_error, "cannot open for writing: " + path);
  }
  out << "mechanism,f,noisy,p,sigma_g,alpha,I,I_prime,delta_prime,"
         "epsilon_total,delta_total,mean_mae,std_mae,repeats,seed\n";
  for (const auto& cell : cells) {
    const auto& r = cell.result;
    const bool subsampled =
        cell.kind == mechanisms::MechanismKind::subsample ||
        cell.kind == mechanisms::MechanismKind::filter_subsample;
    out << mechanisms::mechanism_kind_name(cell.kind) << ','
        << format_double(cell.frequency) << ',' << (cell.noisy ? 1 : 0) << ','
        << (subsampled ? format_double(cell.rate) : std::string()) << ','
        << (cell.kind == mechanisms::MechanismKind::filter_subsample
                ? format_double(cell.sigma_g)
                : std::string())
        << ',' << format_optional(r.resolved.alpha) << ','
        << r.config.participation << ','
        << (r.resolved.i_prime ? std::to_string(*r.resolved.i_prime)
                               : std::string())
        << ',' << format_double(r.resolved.delta_prime) << ','
        << format_double(r.guarantee.epsilon_total) << ','
        << format_double(r.guarantee.delta_total) << ','
        << format_double(r.mean_mae) << ',' << format_double(r.std_mae) << ','
        << r.maes.size() << ',' << r.master_seed << '\n';
  }
}

void write_alpha_csv(const std::vector<AlphaSweepPoint>& points,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::parse_error, "cannot open for writing: " + path);
  }
  out << "p,alpha,delta_prime\n";
  for (const auto& point : points) {
    out << format_double(point.rate) << ',' << format_double(point.alpha)
        << ',' << format_optional(point.delta_prime) << '\n';
  }
}

}  // namespace dpts::harness
