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

#include "dpts/sensitivity.hpp"

#include <cmath>
#include <string>

namespace dpts::sensitivity {
namespace {

constexpr double kAlphaTolerance = 1e-6;
constexpr double kSigmaMaxSlack = 1e-6;

void check_rate(double rate) {
  if (!(rate >= 0.0) || rate > 1.0) {
    throw Error(ErrorCode::invalid_params,
                "sampling rate must lie in [0, 1]");
  }
}

// log C(n, t) via lgamma in extended precision.
long double log_binomial(int n, int t) {
  return std::lgamma(static_cast<long double>(n) + 1.0L) -
         std::lgamma(static_cast<long double>(t) + 1.0L) -
         std::lgamma(static_cast<long double>(n - t) + 1.0L);
}

}  // namespace

const char* bound_method_name(BoundMethod method) {
  switch (method) {
    case BoundMethod::worst_case:
      return "worst-case";
    case BoundMethod::exact_binomial:
      return "exact-binomial";
    case BoundMethod::hoeffding:
      return "hoeffding";
    case BoundMethod::matrix_chernoff:
      return "matrix-chernoff";
  }
  return "unknown";
}

double binomial_tail_delta(int participation, double rate, int surviving) {
  if (participation < 1) {
    throw Error(ErrorCode::invalid_params, "participation must be positive");
  }
  check_rate(rate);
  if (surviving < 0 || surviving > participation) {
    throw Error(ErrorCode::invalid_params,
                "surviving cap must lie in [0, participation]");
  }
  if (surviving == participation) return 0.0;
  if (rate == 0.0) return 0.0;
  if (rate == 1.0) return 1.0;  // all mass sits at X == participation

  const long double log_p = std::log(static_cast<long double>(rate));
  const long double log_q = std::log1p(static_cast<long double>(-rate));
  long double tail = 0.0L;
  for (int t = surviving + 1; t <= participation; ++t) {
    const long double log_term = log_binomial(participation, t) +
                                 static_cast<long double>(t) * log_p +
                                 static_cast<long double>(participation - t) * log_q;
    tail += std::exp(log_term);
  }
  if (tail > 1.0L) tail = 1.0L;
  return static_cast<double>(tail);
}

int solve_i_prime(int participation, double rate, double delta_prime_target) {
  if (!(delta_prime_target > 0.0) || delta_prime_target >= 1.0) {
    throw Error(ErrorCode::invalid_params,
                "delta_prime target must lie in (0, 1)");
  }
  // Tail is nonincreasing in the cap and zero at the full participation, so
  // the smallest satisfying cap is well defined.
  int lo = 0;
  int hi = participation;
  if (binomial_tail_delta(participation, rate, lo) <= delta_prime_target) {
    return lo;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (binomial_tail_delta(participation, rate, mid) <= delta_prime_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double hoeffding_i_prime(int participation, double rate, double delta_prime) {
  if (participation < 1) {
    throw Error(ErrorCode::invalid_params, "participation must be positive");
  }
  check_rate(rate);
  if (!(delta_prime > 0.0) || delta_prime > 1.0) {
    throw Error(ErrorCode::invalid_params,
                "delta_prime must lie in (0, 1]");
  }
  const double n = static_cast<double>(participation);
  return n * rate + std::sqrt(n / 2.0 * std::log(1.0 / delta_prime));
}

double chernoff_delta(const filters::FilterStats& stats, double rate,
                      double alpha) {
  if (!(rate > 0.0) || rate > 1.0) {
    throw Error(ErrorCode::invalid_params,
                "sampling rate must lie in (0, 1]");
  }
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw Error(ErrorCode::invalid_params, "alpha must lie in (0, 1]");
  }
  if (!(stats.srank >= 1.0) || !(stats.max_row_norm_sq > 0.0) ||
      std::abs(stats.sigma_max - 1.0) > kSigmaMaxSlack) {
    throw Error(ErrorCode::invalid_stats,
                "stats must come from a nonnegative l1-normalized kernel "
                "(sigma_max == 1, srank >= 1, L > 0)");
  }
  const double u = alpha * alpha / rate;
  if (u < 1.0 - 1e-12) {
    throw Error(ErrorCode::alpha_below_sampling_rate,
                "bound requires alpha^2 >= sampling rate");
  }
  // log delta' = log(2*srank) + (rate/L) * ((u - 1) - u*log(u)); the second
  // factor is <= 0, so the formula only ever shrinks 2*srank.
  const double exponent = (u - 1.0) - u * std::log(std::max(u, 1.0));
  const double log_delta = std::log(2.0 * stats.srank) +
                           (rate / stats.max_row_norm_sq) * exponent;
  if (log_delta >= 0.0) return 1.0;
  return std::exp(log_delta);
}

double bisect_nonincreasing(const std::function<double(double)>& f, double lo,
                            double hi, double target, double tol) {
  const double domain_lo = lo;
  const double domain_hi = hi;
  if (f(hi) > target) {
    throw Error(ErrorCode::unsatisfiable,
                "target unattainable at the upper endpoint");
  }
  if (f(lo) <= target) {
    hi = lo;
  } else {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (f(mid) <= target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  // Round up to the tolerance grid (conservative: f is nonincreasing), then
  // walk down to the smallest satisfying grid point. The bisection localizes
  // the boundary to within one step, so the walk is at most a couple of
  // evaluations.
  double grid = std::min(domain_hi, std::ceil(hi / tol) * tol);
  while (true) {
    const double prev = grid - tol;
    if (prev < domain_lo || f(prev) > target) break;
    grid = prev;
  }
  return grid;
}

double solve_alpha(const filters::FilterStats& stats, double rate,
                   double delta_prime_target) {
  if (!(delta_prime_target > 0.0) || delta_prime_target >= 1.0) {
    throw Error(ErrorCode::invalid_params,
                "delta_prime target must lie in (0, 1)");
  }
  const double floor = std::sqrt(rate);
  if (chernoff_delta(stats, rate, 1.0) > delta_prime_target) {
    throw Error(ErrorCode::unsatisfiable,
                "even alpha = 1 exceeds the target; shrink the sampling rate "
                "or fall back to worst-case sensitivity");
  }
  return bisect_nonincreasing(
      [&](double a) { return chernoff_delta(stats, rate, a); }, floor, 1.0,
      delta_prime_target, kAlphaTolerance);
}

std::vector<SensitivityBound> bounds_table(
    int participation, double rate, double delta_prime_target,
    const std::optional<filters::FilterStats>& stats) {
  std::vector<SensitivityBound> rows;
  const double n = static_cast<double>(participation);

  rows.push_back({BoundMethod::worst_case, std::sqrt(n), 0.0, std::nullopt});

  const int cap = solve_i_prime(participation, rate, delta_prime_target);
  rows.push_back({BoundMethod::exact_binomial,
                  std::sqrt(static_cast<double>(cap)),
                  binomial_tail_delta(participation, rate, cap),
                  std::nullopt});

  const double hoeffding_cap =
      hoeffding_i_prime(participation, rate, delta_prime_target);
  rows.push_back({BoundMethod::hoeffding, std::sqrt(hoeffding_cap),
                  delta_prime_target, std::nullopt});

  if (stats) {
    SensitivityBound row;
    row.method = BoundMethod::matrix_chernoff;
    try {
      const double alpha = solve_alpha(*stats, rate, delta_prime_target);
      row.delta2 = alpha * std::sqrt(n);
      row.delta_prime = chernoff_delta(*stats, rate, alpha);
      row.note = "alpha=" + std::to_string(alpha);
    } catch (const Error& e) {
      row.delta2 = std::sqrt(n);
      row.delta_prime = 0.0;
      row.note = std::string("unsatisfiable at alpha=1 (") + e.what() +
                 "); worst-case shown";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dpts::sensitivity
