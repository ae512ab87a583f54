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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpts/common.hpp"
#include "dpts/filters.hpp"

namespace dpts::sensitivity {

enum class BoundMethod { worst_case, exact_binomial, hoeffding, matrix_chernoff };

const char* bound_method_name(BoundMethod method);

/// A claimed L2 sensitivity together with the probability, over the
/// subsampling draw, that the claim fails. Worst-case bounds carry
/// delta_prime == 0.
struct SensitivityBound {
  BoundMethod method = BoundMethod::worst_case;
  double delta2 = 0.0;
  double delta_prime = 0.0;
  std::optional<std::string> note;
};

/// Exact upper tail of Binomial(participation, rate) beyond `surviving`:
/// Pr{X > surviving} = sum_{t=surviving+1}^{participation} C(participation,t)
/// rate^t (1-rate)^(participation-t). Terms are evaluated in log space so the
/// sum stays stable for participation counts far beyond the range where
/// binomial coefficients overflow.
double binomial_tail_delta(int participation, double rate, int surviving);

/// Smallest surviving-participation cap whose exact tail probability is at
/// most `delta_prime_target`. Always defined: the tail at `participation`
/// is zero.
int solve_i_prime(int participation, double rate, double delta_prime_target);

/// Closed-form Hoeffding cap on surviving participation:
/// participation*rate + sqrt(participation/2 * ln(1/delta_prime)). Dominates
/// the exact solver's answer.
double hoeffding_i_prime(int participation, double rate, double delta_prime);

/// Matrix-Chernoff tail for filtered subsampling: the probability that the
/// subsampled filter's squared spectral norm exceeds alpha^2,
///   delta' = 2*srank * (e^(u-1) / u^u)^(rate/L),  u = alpha^2/rate,
/// evaluated in log space and clamped to [0, 1]. Requires alpha^2 >= rate and
/// stats with sigma_max == 1.
double chernoff_delta(const filters::FilterStats& stats, double rate,
                      double alpha);

/// Smallest alpha in [sqrt(rate), 1] whose Chernoff tail is at most the
/// target, found by bisection to 1e-6 and rounded up to the tolerance grid
/// so the returned multiplier never understates the noise scale.
double solve_alpha(const filters::FilterStats& stats, double rate,
                   double delta_prime_target);

/// Bisection for a nonincreasing function f on [lo, hi]: returns the
/// smallest point (within `tol`, rounded up to the tol grid) where
/// f(x) <= target. Requires f(hi) <= target.
double bisect_nonincreasing(const std::function<double(double)>& f, double lo,
                            double hi, double target, double tol);

/// One row per bound method for a given (participation, rate, target,
/// optional filter stats); backs the `sensitivity` CLI table.
std::vector<SensitivityBound> bounds_table(
    int participation, double rate, double delta_prime_target,
    const std::optional<filters::FilterStats>& stats);

}  // namespace dpts::sensitivity
