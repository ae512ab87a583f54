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

// Command line front end: release mechanisms, synthetic data generation,
// check-in ingestion, sensitivity tables, and the benchmark sweeps.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpts/accounting.hpp"
#include "dpts/dataio.hpp"
#include "dpts/filters.hpp"
#include "dpts/harness.hpp"
#include "dpts/mechanisms.hpp"
#include "dpts/sensitivity.hpp"
#include "dpts/series.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using namespace dpts;

json guarantee_to_json(const accounting::PrivacyGuarantee& g) {
  json provenance{
      {"method", accounting::composition_method_name(g.provenance.method)},
      {"base_epsilon", g.provenance.base_epsilon},
      {"base_delta", g.provenance.base_delta},
      {"delta_prime", g.provenance.delta_prime},
      {"overrun", g.provenance.overrun},
  };
  if (g.provenance.alpha) provenance["alpha"] = *g.provenance.alpha;
  if (g.provenance.i_prime) provenance["i_prime"] = *g.provenance.i_prime;
  if (g.provenance.participation) {
    provenance["participation"] = *g.provenance.participation;
  }
  return json{{"epsilon_total", g.epsilon_total},
              {"delta_total", g.delta_total},
              {"vacuous", g.vacuous},
              {"provenance", provenance}};
}

json resolved_to_json(const mechanisms::ResolvedParams& r) {
  json out{{"noise_multiplier", r.noise_multiplier},
           {"sigma", r.sigma},
           {"base_delta", r.base_delta},
           {"delta_prime", r.delta_prime}};
  if (r.alpha) out["alpha"] = *r.alpha;
  if (r.i_prime) out["i_prime"] = *r.i_prime;
  return out;
}

std::vector<double> parse_grid(const std::string& spec) {
  // "start:stop:step" inclusive grid, or a comma-separated list.
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double start = 0.0, stop = 0.0, step = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0.0) {
      throw Error(ErrorCode::invalid_params, "bad grid spec: " + spec);
    }
    const auto count =
        static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    for (long long i = 0; i <= count; ++i) {
      grid.push_back(std::min(stop, start + step * static_cast<double>(i)));
    }
  } else {
    std::string token;
    std::istringstream stream(spec);
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) grid.push_back(std::stod(token));
    }
  }
  if (grid.empty()) {
    throw Error(ErrorCode::invalid_params, "empty grid spec: " + spec);
  }
  return grid;
}

struct RunArgs {
  std::string mechanism = "subsample";
  std::string input_path;
  std::string output_path;
  std::string sidecar_path;
  double epsilon = 0.5;
  double delta = 1e-4;
  int participation = 0;
  std::optional<double> rate;
  std::optional<double> sigma_g;
  std::optional<int> dft_k;
  std::optional<double> alpha;
  std::optional<int> i_prime;
  std::optional<double> delta_prime_target;
  std::uint64_t seed = 0;
};

int command_run(const RunArgs& args) {
  // Accept real-valued inputs: synthetic series and filtered signals are not
  // integer counts.
  const auto series = dataio::ingest_series(args.input_path, false);

  mechanisms::MechanismConfig config;
  config.kind = mechanisms::mechanism_kind_from_name(args.mechanism);
  config.epsilon = args.epsilon;
  config.delta = args.delta;
  config.participation =
      args.participation > 0
          ? args.participation
          : static_cast<int>((series.size() + 9) / 10);  // ceil(T/10)
  config.seed = args.seed;
  if (config.kind == mechanisms::MechanismKind::subsample ||
      config.kind == mechanisms::MechanismKind::filter_subsample) {
    config.sampling_rate = args.rate.value_or(0.1);
    config.alpha = args.alpha;
    config.i_prime = args.i_prime;
    config.delta_prime_target = args.delta_prime_target;
  }
  if (config.kind == mechanisms::MechanismKind::filter_subsample) {
    config.kernel =
        filters::gaussian_kernel(series.size(), args.sigma_g.value_or(10.0));
  }
  if (config.kind == mechanisms::MechanismKind::dft && args.dft_k) {
    config.dft_coefficients = *args.dft_k;
  }

  const auto result = mechanisms::release(series, config);
  dataio::write_series(result.output.values, args.output_path);

  json sidecar{
      {"mechanism", mechanisms::mechanism_kind_name(config.kind)},
      {"epsilon", config.epsilon},
      {"delta", config.delta},
      {"participation", config.participation},
      {"seed", config.seed},
      {"input", args.input_path},
      {"output", args.output_path},
      {"length", series.size()},
      {"resolved", resolved_to_json(result.resolved)},
      {"guarantee", guarantee_to_json(result.guarantee)},
  };
  if (config.sampling_rate) sidecar["p"] = *config.sampling_rate;
  if (args.sigma_g) sidecar["sigma_g"] = *args.sigma_g;
  if (config.dft_coefficients) sidecar["k"] = *config.dft_coefficients;

  const std::string sidecar_path = args.sidecar_path.empty()
                                       ? args.output_path + ".meta.json"
                                       : args.sidecar_path;
  std::ofstream out(sidecar_path);
  out << sidecar.dump(2) << '\n';
  std::cout << "wrote " << args.output_path << " and " << sidecar_path
            << " (epsilon_total=" << result.guarantee.epsilon_total
            << ", delta_total=" << result.guarantee.delta_total << ")\n";
  return 0;
}

int command_synth(double f, double noise_scale, std::uint64_t seed,
                  int base_length, double omega, const std::string& out_clean,
                  const std::string& out_noisy) {
  dataio::SynthConfig config;
  config.relative_frequency = f;
  config.noise_scale = noise_scale;
  config.seed = seed;
  config.base_length = base_length;
  if (omega > 0.0) config.omega = omega;
  const auto pair = dataio::generate_synth(config);
  if (!out_clean.empty()) dataio::write_series(pair.clean.values, out_clean);
  if (!out_noisy.empty()) dataio::write_series(pair.noisy.values, out_noisy);
  std::cout << "generated " << pair.clean.size() << " samples at f=" << f
            << '\n';
  return 0;
}

struct IngestArgs {
  std::string format = "series";
  std::string input_path;
  std::string output_path;
  std::string report_path;
  std::string venue;
  double bin_hours = 24.0;
  std::string from;
  std::string to;
  int user_col = 0;
  int time_col = 1;
  int venue_col = 2;
  bool no_dedup = false;
};

int command_ingest(const IngestArgs& args) {
  if (args.format == "series") {
    const auto series = dataio::ingest_series(args.input_path);
    if (!args.output_path.empty()) {
      dataio::write_series(series.values, args.output_path);
    }
    std::cout << "read " << series.size() << " steps\n";
    return 0;
  }
  if (args.format != "checkins") {
    throw Error(ErrorCode::invalid_params,
                "format must be 'series' or 'checkins'");
  }
  const std::int64_t t_start = dataio::parse_timestamp(args.from);
  const std::int64_t t_end = dataio::parse_timestamp(args.to);
  dataio::ColumnMap columns{args.user_col, args.time_col, args.venue_col};
  const auto result = dataio::ingest_checkins(
      args.input_path, args.venue, args.bin_hours * 3600.0, t_start, t_end,
      columns, !args.no_dedup);
  if (!result.venue_found) {
    std::cerr << "warning: no record matched venue '" << args.venue
              << "'; series is all zeros\n";
  }
  if (!args.output_path.empty()) {
    dataio::write_series(result.series.values, args.output_path);
  }
  if (!args.report_path.empty()) {
    json report{
        {"venue", args.venue},
        {"bins", result.series.size()},
        {"bin_seconds", args.bin_hours * 3600.0},
        {"window_start", t_start},
        {"window_end", t_end},
        {"empirical_participation", result.empirical_participation},
        {"empirical_participation_raw", result.empirical_participation_raw},
        {"venue_found", result.venue_found},
        {"matched_records", result.matched_records},
        {"deduplicated_records", result.deduplicated_records},
    };
    std::ofstream out(args.report_path);
    out << report.dump(2) << '\n';
  }
  std::cout << "binned " << result.deduplicated_records << " check-ins into "
            << result.series.size()
            << " steps (I=" << result.empirical_participation
            << ", raw=" << result.empirical_participation_raw << ")\n";
  return 0;
}

int command_kernel(int length, double sigma_g, const std::string& out_path) {
  const auto kernel = filters::gaussian_kernel(
      static_cast<std::size_t>(length), sigma_g);
  const auto stats = filters::filter_stats(kernel);
  if (!out_path.empty()) dataio::write_kernel(kernel, out_path);
  std::printf("T=%d sigma_g=%g sigma_max=%.12g srank=%.12g L=%.12g\n", length,
              sigma_g, stats.sigma_max, stats.srank, stats.max_row_norm_sq);
  return 0;
}

struct SensitivityArgs {
  int participation = 100;
  double rate = 0.1;
  double delta_prime = 1e-5;
  int length = 10000;
  std::string kernel = "gaussian";
  double sigma_g = 10.0;
  bool csv = false;
};

int command_sensitivity(const SensitivityArgs& args) {
  std::optional<filters::FilterStats> stats;
  if (args.kernel == "gaussian") {
    stats = filters::filter_stats(filters::gaussian_kernel(
        static_cast<std::size_t>(args.length), args.sigma_g));
  } else if (args.kernel == "identity") {
    stats = filters::filter_stats(
        filters::identity_kernel(static_cast<std::size_t>(args.length)));
  } else if (args.kernel != "none") {
    throw Error(ErrorCode::invalid_params,
                "kernel must be gaussian, identity, or none");
  }
  const auto rows = sensitivity::bounds_table(args.participation, args.rate,
                                              args.delta_prime, stats);
  if (args.csv) {
    std::printf("method,delta2,delta_prime,note\n");
    for (const auto& row : rows) {
      std::printf("%s,%.17g,%.17g,%s\n",
                  sensitivity::bound_method_name(row.method), row.delta2,
                  row.delta_prime, row.note ? row.note->c_str() : "");
    }
  } else {
    std::printf("%-16s %14s %14s  %s\n", "method", "delta2", "delta_prime",
                "note");
    for (const auto& row : rows) {
      std::printf("%-16s %14.6g %14.6g  %s\n",
                  sensitivity::bound_method_name(row.method), row.delta2,
                  row.delta_prime, row.note ? row.note->c_str() : "");
    }
  }
  return 0;
}

struct SweepArgs {
  std::string kind = "frequency";
  std::string config_path;
  std::string out_path = "results.csv";
  std::string alpha_grid;
  bool emit_plot_data = false;
};

harness::FrequencySweepOptions frequency_options_from_json(const json& config) {
  harness::FrequencySweepOptions options;
  if (config.contains("t_base")) options.synth.base_length = config["t_base"];
  if (config.contains("participation")) {
    options.synth.participation = config["participation"];
  }
  if (config.contains("amplitude")) options.synth.amplitude = config["amplitude"];
  if (config.contains("offset")) options.synth.offset = config["offset"];
  if (config.contains("slope")) options.synth.slope = config["slope"];
  if (config.contains("omega")) options.synth.omega = config["omega"];
  if (config.contains("noise_scale")) {
    options.synth.noise_scale = config["noise_scale"];
  }
  if (config.contains("frequencies")) {
    options.frequencies = config["frequencies"].get<std::vector<double>>();
  }
  if (config.contains("mechanisms")) {
    options.kinds.clear();
    for (const auto& name : config["mechanisms"]) {
      options.kinds.push_back(
          mechanisms::mechanism_kind_from_name(name.get<std::string>()));
    }
  }
  if (config.contains("epsilon")) options.epsilon = config["epsilon"];
  if (config.contains("delta")) options.delta = config["delta"];
  if (config.contains("repeats")) options.repeats = config["repeats"];
  if (config.contains("seed")) options.master_seed = config["seed"];
  if (config.contains("log_base")) {
    const std::string base = config["log_base"];
    if (base == "2") {
      options.log_base = harness::LogBase::two;
    } else if (base == "e" || base == "natural") {
      options.log_base = harness::LogBase::natural;
    } else {
      throw Error(ErrorCode::invalid_params, "log_base must be '2' or 'e'");
    }
  }
  if (config.contains("dft_coefficients")) {
    options.dft_coefficients = config["dft_coefficients"];
  }
  if (config.contains("base_rate")) options.base_rate = config["base_rate"];
  if (config.contains("base_sigma_g")) {
    options.base_sigma_g = config["base_sigma_g"];
  }
  if (config.contains("include_noiseless")) {
    options.include_noiseless = config["include_noiseless"];
  }
  if (config.contains("include_noisy")) {
    options.include_noisy = config["include_noisy"];
  }
  if (config.contains("threads")) options.threads = config["threads"];
  return options;
}

void emit_frequency_plot_data(const std::vector<harness::FrequencyCell>& cells,
                              const harness::FrequencySweepOptions& options,
                              const std::string& base_path) {
  std::vector<harness::FrequencyCell> noiseless, noisy;
  for (const auto& cell : cells) {
    (cell.noisy ? noisy : noiseless).push_back(cell);
  }
  if (!noiseless.empty()) {
    harness::write_frequency_csv(noiseless, base_path + ".noiseless.csv");
  }
  if (!noisy.empty()) {
    harness::write_frequency_csv(noisy, base_path + ".noisy.csv");
  }

  // Example traces: one release per mechanism at the largest frequency.
  if (options.frequencies.empty()) return;
  double f = options.frequencies.front();
  for (double candidate : options.frequencies) f = std::max(f, candidate);
  dataio::SynthConfig synth = options.synth;
  synth.relative_frequency = f;
  synth.seed = random::derive_seed(options.master_seed, random::kTraceStream);
  const auto pair = dataio::generate_synth(synth);

  std::ofstream out(base_path + ".traces.csv");
  out << "t,reference";
  std::vector<std::vector<double>> outputs;
  for (const auto kind : options.kinds) {
    mechanisms::MechanismConfig config;
    config.kind = kind;
    config.epsilon = options.epsilon;
    config.delta = options.delta;
    config.participation = options.synth.participation;
    config.seed =
        random::derive_seed(options.master_seed, random::kTraceStream,
                            static_cast<std::uint64_t>(kind) + 1);
    if (kind == mechanisms::MechanismKind::subsample ||
        kind == mechanisms::MechanismKind::filter_subsample) {
      config.sampling_rate = harness::schedule_rate(f, options);
    }
    if (kind == mechanisms::MechanismKind::filter_subsample) {
      config.kernel = filters::gaussian_kernel(
          pair.noisy.size(), harness::schedule_sigma_g(f, options));
    }
    if (kind == mechanisms::MechanismKind::dft) {
      config.dft_coefficients = options.dft_coefficients;
    }
    outputs.push_back(mechanisms::release(pair.noisy, config).output.values);
    out << ',' << mechanisms::mechanism_kind_name(kind);
  }
  out << '\n';
  for (std::size_t t = 0; t < pair.clean.size(); ++t) {
    out << t << ',' << pair.clean.values[t];
    for (const auto& values : outputs) out << ',' << values[t];
    out << '\n';
  }
}

int command_sweep(const SweepArgs& args) {
  json config = json::object();
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) {
      throw Error(ErrorCode::parse_error,
                  "cannot open config: " + args.config_path);
    }
    in >> config;
  }

  if (args.kind == "frequency") {
    const auto options = frequency_options_from_json(config);
    const auto cells = harness::sweep_frequency(options);
    harness::write_frequency_csv(cells, args.out_path);
    std::cout << "wrote " << cells.size() << " rows to " << args.out_path
              << '\n';
    if (args.emit_plot_data) {
      emit_frequency_plot_data(cells, options, args.out_path);
    }
    return 0;
  }
  if (args.kind != "alpha") {
    throw Error(ErrorCode::invalid_params,
                "sweep kind must be 'frequency' or 'alpha'");
  }

  const int length = config.value("length", 10000);
  const double sigma_g = config.value("sigma_g", 10.0);
  std::vector<double> rates = config.contains("rates")
                                  ? config["rates"].get<std::vector<double>>()
                                  : std::vector<double>{0.05, 0.1, 0.2};
  std::vector<double> alphas;
  if (!args.alpha_grid.empty()) {
    alphas = parse_grid(args.alpha_grid);
  } else if (config.contains("alphas")) {
    alphas = config["alphas"].get<std::vector<double>>();
  } else {
    for (int i = 0; i <= 95; ++i) {
      alphas.push_back(std::min(1.0, 0.05 + 0.01 * i));
    }
  }

  const auto stats = filters::filter_stats(
      filters::gaussian_kernel(static_cast<std::size_t>(length), sigma_g));
  const auto points = harness::sweep_alpha(stats, rates, alphas);
  harness::write_alpha_csv(points, args.out_path);
  std::cout << "wrote " << points.size() << " rows to " << args.out_path
            << " (srank=" << stats.srank << ", L=" << stats.max_row_norm_sq
            << ")\n";
  if (args.emit_plot_data) {
    harness::write_alpha_csv(points, args.out_path + ".alpha_curve.csv");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private publishing of count time-series via "
               "subsampling and filtering"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Release one sanitized series");
  run->add_option("--mechanism", run_args.mechanism,
                  "gaussian | dft | subsample | filter-subsample")
      ->required();
  run->add_option("--input", run_args.input_path, "input t,value CSV")
      ->required();
  run->add_option("--output", run_args.output_path, "output t,value CSV")
      ->required();
  run->add_option("--sidecar", run_args.sidecar_path,
                  "metadata JSON path (default: <output>.meta.json)");
  run->add_option("--epsilon", run_args.epsilon, "privacy parameter epsilon");
  run->add_option("--delta", run_args.delta, "privacy parameter delta");
  run->add_option("--I,--participation", run_args.participation,
                  "participation limit (default ceil(T/10))");
  auto* rate_opt =
      run->add_option("--p,--rate", run_args.rate, "Poisson sampling rate");
  auto* sigma_opt = run->add_option("--sigma-g", run_args.sigma_g,
                                    "gaussian kernel width");
  auto* k_opt =
      run->add_option("--k", run_args.dft_k, "retained DFT coefficients");
  auto* alpha_opt =
      run->add_option("--alpha", run_args.alpha, "noise multiplier factor");
  auto* iprime_opt = run->add_option("--i-prime", run_args.i_prime,
                                     "surviving participation cap");
  auto* dpt_opt = run->add_option("--delta-prime", run_args.delta_prime_target,
                                  "target failure probability");
  run->add_option("--seed", run_args.seed, "master seed");
  (void)rate_opt;
  (void)sigma_opt;
  (void)k_opt;
  (void)alpha_opt;
  (void)iprime_opt;
  (void)dpt_opt;

  double synth_f = 1.0;
  double synth_d = 100.0;
  std::uint64_t synth_seed = 0;
  int synth_t_base = 10000;
  double synth_omega = -1.0;
  std::string synth_out_clean = "clean.csv";
  std::string synth_out_noisy;
  auto* synth = app.add_subcommand("synth", "Generate the synthetic benchmark");
  synth->add_option("--f", synth_f, "relative sampling frequency in (0,1]");
  synth->add_option("--d", synth_d, "observation noise scale");
  synth->add_option("--seed", synth_seed, "noise seed");
  synth->add_option("--t-base", synth_t_base, "length at f=1");
  synth->add_option("--omega", synth_omega, "angular frequency per step");
  synth->add_option("--out", synth_out_clean, "clean output CSV");
  synth->add_option("--out-noisy", synth_out_noisy, "noisy output CSV");

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "Ingest raw data into t,value");
  ingest->add_option("--format", ingest_args.format, "series | checkins");
  ingest->add_option("--input", ingest_args.input_path, "input file")
      ->required();
  ingest->add_option("--out", ingest_args.output_path, "output CSV");
  ingest->add_option("--report", ingest_args.report_path,
                     "participation report JSON (checkins)");
  ingest->add_option("--venue", ingest_args.venue, "venue id (checkins)");
  ingest->add_option("--bin-hours", ingest_args.bin_hours, "bin width");
  ingest->add_option("--from", ingest_args.from, "window start (inclusive)");
  ingest->add_option("--to", ingest_args.to, "window end (exclusive)");
  ingest->add_option("--user-col", ingest_args.user_col, "user column");
  ingest->add_option("--time-col", ingest_args.time_col, "timestamp column");
  ingest->add_option("--venue-col", ingest_args.venue_col, "venue column");
  ingest->add_flag("--no-dedup", ingest_args.no_dedup,
                   "count repeat check-ins within a bin");

  int kernel_length = 10000;
  double kernel_sigma_g = 10.0;
  std::string kernel_out;
  auto* kernel = app.add_subcommand("kernel",
                                    "Inspect or export a gaussian kernel");
  kernel->add_option("--T", kernel_length, "kernel length");
  kernel->add_option("--sigma-g", kernel_sigma_g, "kernel width");
  kernel->add_option("--out", kernel_out, "k,h_k CSV path");

  SensitivityArgs sensitivity_args;
  auto* sens = app.add_subcommand(
      "sensitivity", "Tabulate sensitivity bounds for (I, p, kernel)");
  sens->add_option("--I,--participation", sensitivity_args.participation,
                   "participation limit");
  sens->add_option("--p,--rate", sensitivity_args.rate, "sampling rate");
  sens->add_option("--delta-prime", sensitivity_args.delta_prime,
                   "target failure probability");
  sens->add_option("--T", sensitivity_args.length, "kernel length");
  sens->add_option("--kernel", sensitivity_args.kernel,
                   "gaussian | identity | none");
  sens->add_option("--sigma-g", sensitivity_args.sigma_g, "kernel width");
  sens->add_flag("--csv", sensitivity_args.csv, "emit CSV instead of a table");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Benchmark sweeps");
  sweep->add_option("--kind", sweep_args.kind, "frequency | alpha");
  sweep->add_option("--config", sweep_args.config_path, "JSON config");
  sweep->add_option("--out", sweep_args.out_path, "output CSV");
  sweep->add_option("--alpha-grid", sweep_args.alpha_grid,
                    "alpha grid, start:stop:step or comma list");
  sweep->add_flag("--emit-plot-data", sweep_args.emit_plot_data,
                  "also write per-figure CSVs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return command_run(run_args);
    if (synth->parsed()) {
      return command_synth(synth_f, synth_d, synth_seed, synth_t_base,
                           synth_omega, synth_out_clean, synth_out_noisy);
    }
    if (ingest->parsed()) return command_ingest(ingest_args);
    if (kernel->parsed()) {
      return command_kernel(kernel_length, kernel_sigma_g, kernel_out);
    }
    if (sens->parsed()) return command_sensitivity(sensitivity_args);
    if (sweep->parsed()) return command_sweep(sweep_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
