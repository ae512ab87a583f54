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

#include <optional>

#include "dpts/common.hpp"
#include "dpts/filters.hpp"

namespace dpts::accounting {

enum class CompositionMethod { direct, filtered, unfiltered, degraded };

const char* composition_method_name(CompositionMethod method);

/// Everything needed to recompute a composed guarantee byte-for-byte.
struct Provenance {
  CompositionMethod method = CompositionMethod::direct;
  double base_epsilon = 0.0;
  double base_delta = 0.0;
  double delta_prime = 0.0;
  std::optional<double> alpha;
  std::optional<int> i_prime;
  std::optional<int> participation;  // I, unfiltered route only
  double overrun = 1.0;              // c, degraded route only
};

/// The (epsilon, delta) actually certified for a release. `delta_total` is
/// clamped at 1 with the `vacuous` flag set instead of erroring, so sweeps
/// may explore vacuous regions.
struct PrivacyGuarantee {
  double epsilon_total = 0.0;
  double delta_total = 0.0;
  bool vacuous = false;
  Provenance provenance;
};

/// Pass-through guarantee for mechanisms without a sensitivity failure mode
/// (plain Gaussian and DFT baselines).
PrivacyGuarantee make_direct(double epsilon, double delta);

/// Filtered-subsample composition:
/// delta_total = delta + delta_prime * (e^(eps/alpha) - e^eps).
PrivacyGuarantee compose_filtered(double epsilon, double delta, double alpha,
                                  double delta_prime);

/// Subsample-only composition:
/// delta_total = delta + delta_prime * (e^(sqrt(I/I')*eps) - e^eps).
PrivacyGuarantee compose_unfiltered(double epsilon, double delta,
                                    int participation, int i_prime,
                                    double delta_prime);

/// Guarantee when the participation assumption overshoots by factor c > 1:
/// epsilon scales by sqrt(c) and the same penalty form applies at the
/// scaled epsilon.
PrivacyGuarantee degrade(double epsilon, double delta, double alpha,
                         double delta_prime, double overrun);

/// Recomputes delta_total from a provenance record with the exact same
/// floating-point operations as the composition that produced it.
double recompute_delta_total(const Provenance& provenance);

/// Solved noise-multiplier parameters meeting an end-to-end (epsilon,
/// delta) budget. The delta budget is split evenly between the base
/// mechanism and the sensitivity failure penalty.
struct BudgetSolution {
  std::optional<double> alpha;
  std::optional<int> i_prime;
  double base_delta = 0.0;
  double delta_prime = 0.0;
  PrivacyGuarantee guarantee;
};

/// Filtered route: smallest alpha whose penalty term fits delta_target/2.
BudgetSolution budget_solve(double epsilon_target, double delta_target,
                            const filters::FilterStats& stats, double rate);

/// Unfiltered route: smallest surviving-participation cap whose penalty
/// term fits delta_target/2.
BudgetSolution budget_solve(double epsilon_target, double delta_target,
                            int participation, double rate);

}  // namespace dpts::accounting
