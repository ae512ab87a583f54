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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dpts/accounting.hpp"
#include "dpts/dataio.hpp"
#include "dpts/filters.hpp"
#include "dpts/harness.hpp"
#include "dpts/mechanisms.hpp"
#include "dpts/sensitivity.hpp"
#include "dpts/series.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace dpts;

namespace {

py::dict guarantee_to_dict(const accounting::PrivacyGuarantee& g) {
  py::dict provenance;
  provenance["method"] =
      accounting::composition_method_name(g.provenance.method);
  provenance["base_epsilon"] = g.provenance.base_epsilon;
  provenance["base_delta"] = g.provenance.base_delta;
  provenance["delta_prime"] = g.provenance.delta_prime;
  provenance["overrun"] = g.provenance.overrun;
  if (g.provenance.alpha) provenance["alpha"] = *g.provenance.alpha;
  if (g.provenance.i_prime) provenance["i_prime"] = *g.provenance.i_prime;
  if (g.provenance.participation) {
    provenance["participation"] = *g.provenance.participation;
  }
  py::dict out;
  out["epsilon_total"] = g.epsilon_total;
  out["delta_total"] = g.delta_total;
  out["vacuous"] = g.vacuous;
  out["provenance"] = provenance;
  return out;
}

py::dict resolved_to_dict(const mechanisms::ResolvedParams& r) {
  py::dict out;
  out["noise_multiplier"] = r.noise_multiplier;
  out["sigma"] = r.sigma;
  out["base_delta"] = r.base_delta;
  out["delta_prime"] = r.delta_prime;
  if (r.alpha) out["alpha"] = *r.alpha;
  if (r.i_prime) out["i_prime"] = *r.i_prime;
  return out;
}

mechanisms::MechanismConfig build_config(
    const std::string& mechanism, double epsilon, double delta,
    int participation, std::optional<double> rate,
    std::optional<double> sigma_g, std::optional<double> alpha,
    std::optional<int> i_prime, std::optional<double> delta_prime_target,
    std::optional<int> dft_coefficients, std::uint64_t seed,
    std::size_t length) {
  mechanisms::MechanismConfig config;
  config.kind = mechanisms::mechanism_kind_from_name(mechanism);
  config.epsilon = epsilon;
  config.delta = delta;
  config.participation = participation;
  config.seed = seed;
  if (config.kind == mechanisms::MechanismKind::subsample ||
      config.kind == mechanisms::MechanismKind::filter_subsample) {
    config.sampling_rate = rate.value_or(0.1);
    config.alpha = alpha;
    config.i_prime = i_prime;
    config.delta_prime_target = delta_prime_target;
  }
  if (config.kind == mechanisms::MechanismKind::filter_subsample) {
    config.kernel = filters::gaussian_kernel(length, sigma_g.value_or(10.0));
  }
  if (config.kind == mechanisms::MechanismKind::dft) {
    config.dft_coefficients = dft_coefficients;
  }
  return config;
}

}  // namespace

PYBIND11_MODULE(_dpts, m) {
  m.doc() = "Differentially private count time-series release via "
            "subsampling and filtering";

  py::register_exception<Error>(m, "DptsError");

  py::class_<filters::FilterStats>(m, "FilterStats")
      .def(py::init([](double sigma_max, double srank, double row_norm_sq) {
             return filters::FilterStats{sigma_max, srank, row_norm_sq};
           }),
           "sigma_max"_a = 1.0, "srank"_a = 1.0, "max_row_norm_sq"_a = 1.0)
      .def_readonly("sigma_max", &filters::FilterStats::sigma_max)
      .def_readonly("srank", &filters::FilterStats::srank)
      .def_readonly("max_row_norm_sq", &filters::FilterStats::max_row_norm_sq)
      .def("__repr__", [](const filters::FilterStats& s) {
        return "FilterStats(sigma_max=" + std::to_string(s.sigma_max) +
               ", srank=" + std::to_string(s.srank) +
               ", max_row_norm_sq=" + std::to_string(s.max_row_norm_sq) + ")";
      });

  m.def(
      "gaussian_kernel",
      [](std::size_t length, double sigma_g) {
        return filters::gaussian_kernel(length, sigma_g).weights;
      },
      "length"_a, "sigma_g"_a,
      "Circular gaussian kernel, nonnegative and l1-normalized.");
  m.def(
      "identity_kernel",
      [](std::size_t length) {
        return filters::identity_kernel(length).weights;
      },
      "length"_a);
  m.def(
      "filter_stats",
      [](const std::vector<double>& weights) {
        return filters::filter_stats(filters::FilterKernel{weights});
      },
      "kernel"_a, "Spectral statistics (sigma_max, srank, L) of the kernel.");
  m.def(
      "apply_filter",
      [](const std::vector<double>& weights, const std::vector<double>& x) {
        return filters::apply_filter(filters::FilterKernel{weights}, x);
      },
      "kernel"_a, "x"_a, "Circular convolution of x with the kernel.");

  m.def("binomial_tail_delta", &sensitivity::binomial_tail_delta,
        "participation"_a, "rate"_a, "surviving"_a,
        "Exact upper binomial tail Pr{X > surviving}.");
  m.def("solve_i_prime", &sensitivity::solve_i_prime, "participation"_a,
        "rate"_a, "delta_prime_target"_a);
  m.def("hoeffding_i_prime", &sensitivity::hoeffding_i_prime,
        "participation"_a, "rate"_a, "delta_prime"_a);
  m.def("chernoff_delta", &sensitivity::chernoff_delta, "stats"_a, "rate"_a,
        "alpha"_a);
  m.def("solve_alpha", &sensitivity::solve_alpha, "stats"_a, "rate"_a,
        "delta_prime_target"_a);

  m.def("gaussian_noise_sigma", &mechanisms::gaussian_noise_sigma,
        "l2_sensitivity"_a, "epsilon"_a, "delta"_a);

  m.def(
      "compose_filtered",
      [](double epsilon, double delta, double alpha, double delta_prime) {
        return guarantee_to_dict(
            accounting::compose_filtered(epsilon, delta, alpha, delta_prime));
      },
      "epsilon"_a, "delta"_a, "alpha"_a, "delta_prime"_a);
  m.def(
      "compose_unfiltered",
      [](double epsilon, double delta, int participation, int i_prime,
         double delta_prime) {
        return guarantee_to_dict(accounting::compose_unfiltered(
            epsilon, delta, participation, i_prime, delta_prime));
      },
      "epsilon"_a, "delta"_a, "participation"_a, "i_prime"_a,
      "delta_prime"_a);
  m.def(
      "degrade",
      [](double epsilon, double delta, double alpha, double delta_prime,
         double overrun) {
        return guarantee_to_dict(
            accounting::degrade(epsilon, delta, alpha, delta_prime, overrun));
      },
      "epsilon"_a, "delta"_a, "alpha"_a, "delta_prime"_a, "overrun"_a);

  m.def(
      "decimate",
      [](const std::vector<double>& values, double relative_frequency) {
        core::CountSeries series{values, 1.0, 0};
        return core::decimate(series, relative_frequency).values;
      },
      "values"_a, "relative_frequency"_a);

  m.def(
      "generate_synth",
      [](double relative_frequency, int base_length, double amplitude,
         double offset, double slope, double omega, double noise_scale,
         std::uint64_t seed) {
        dataio::SynthConfig config;
        config.relative_frequency = relative_frequency;
        config.base_length = base_length;
        config.amplitude = amplitude;
        config.offset = offset;
        config.slope = slope;
        if (omega > 0.0) config.omega = omega;
        config.noise_scale = noise_scale;
        config.seed = seed;
        const auto pair = dataio::generate_synth(config);
        return py::make_tuple(pair.clean.values, pair.noisy.values);
      },
      "relative_frequency"_a = 1.0, "base_length"_a = 10000,
      "amplitude"_a = 200.0, "offset"_a = 500.0, "slope"_a = 0.1,
      "omega"_a = -1.0, "noise_scale"_a = 100.0, "seed"_a = 0,
      "Returns (clean, noisy) synthetic count series.");

  m.def(
      "release",
      [](const std::vector<double>& values, const std::string& mechanism,
         double epsilon, double delta, int participation,
         std::optional<double> rate, std::optional<double> sigma_g,
         std::optional<double> alpha, std::optional<int> i_prime,
         std::optional<double> delta_prime_target,
         std::optional<int> dft_coefficients, std::uint64_t seed) {
        core::CountSeries series{values, 1.0, 0};
        const auto config = build_config(
            mechanism, epsilon, delta, participation, rate, sigma_g, alpha,
            i_prime, delta_prime_target, dft_coefficients, seed,
            values.size());
        const auto result = mechanisms::release(series, config);
        py::dict meta;
        meta["guarantee"] = guarantee_to_dict(result.guarantee);
        meta["resolved"] = resolved_to_dict(result.resolved);
        return py::make_tuple(result.output.values, meta);
      },
      "values"_a, "mechanism"_a, "epsilon"_a = 0.5, "delta"_a = 1e-4,
      "participation"_a = 1, "rate"_a = py::none(), "sigma_g"_a = py::none(),
      "alpha"_a = py::none(), "i_prime"_a = py::none(),
      "delta_prime_target"_a = py::none(),
      "dft_coefficients"_a = py::none(), "seed"_a = 0,
      "Runs one mechanism end to end; returns (output, metadata).");

  m.def(
      "mae",
      [](const std::vector<double>& reference,
         const std::vector<double>& output) {
        return harness::mae(reference, output);
      },
      "reference"_a, "output"_a);

  m.def(
      "run_experiment",
      [](const std::vector<double>& input_values,
         const std::vector<double>& reference, const std::string& mechanism,
         double epsilon, double delta, int participation,
         std::optional<double> rate, std::optional<double> sigma_g,
         std::optional<int> dft_coefficients, int repeats,
         std::uint64_t seed, int threads) {
        core::CountSeries series{input_values, 1.0, 0};
        const core::Signal ref{reference, std::nullopt};
        const auto config = build_config(
            mechanism, epsilon, delta, participation, rate, sigma_g,
            std::nullopt, std::nullopt, std::nullopt, dft_coefficients, 0,
            input_values.size());
        const auto result = harness::run_experiment(series, ref, config,
                                                    repeats, seed, threads);
        py::dict out;
        out["maes"] = result.maes;
        out["mean_mae"] = result.mean_mae;
        out["std_mae"] = result.std_mae;
        out["failures"] = result.failures;
        out["guarantee"] = guarantee_to_dict(result.guarantee);
        out["resolved"] = resolved_to_dict(result.resolved);
        return out;
      },
      "input"_a, "reference"_a, "mechanism"_a, "epsilon"_a = 0.5,
      "delta"_a = 1e-4, "participation"_a = 1, "rate"_a = py::none(),
      "sigma_g"_a = py::none(), "dft_coefficients"_a = py::none(),
      "repeats"_a = 100, "seed"_a = 0, "threads"_a = 0,
      "Repeated releases with MAE statistics against a reference.");
}
