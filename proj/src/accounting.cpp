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

#include "dpts/accounting.hpp"

#include <cmath>

#include "dpts/sensitivity.hpp"

namespace dpts::accounting {
namespace {

void check_base(double epsilon, double delta) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::invalid_epsilon, "epsilon must be positive");
  }
  if (!(delta > 0.0) || delta >= 1.0) {
    throw Error(ErrorCode::invalid_params, "delta must lie in (0, 1)");
  }
}

void check_delta_prime(double delta_prime) {
  if (!(delta_prime >= 0.0) || delta_prime > 1.0) {
    throw Error(ErrorCode::invalid_params, "delta_prime must lie in [0, 1]");
  }
}

// delta + delta_prime * (e^(amplification*eps) - e^eps), shared by every
// composition route so algebraically equal inputs compose bit-identically.
double composed_delta(double epsilon, double delta, double delta_prime,
                      double amplification) {
  return delta +
         delta_prime * (std::exp(amplification * epsilon) - std::exp(epsilon));
}

PrivacyGuarantee finish(double epsilon_total, double delta_total,
                        Provenance provenance) {
  PrivacyGuarantee g;
  g.epsilon_total = epsilon_total;
  g.provenance = std::move(provenance);
  if (delta_total >= 1.0) {
    g.delta_total = 1.0;
    g.vacuous = true;
  } else {
    g.delta_total = delta_total;
  }
  return g;
}

}  // namespace

const char* composition_method_name(CompositionMethod method) {
  switch (method) {
    case CompositionMethod::direct:
      return "direct";
    case CompositionMethod::filtered:
      return "filtered";
    case CompositionMethod::unfiltered:
      return "unfiltered";
    case CompositionMethod::degraded:
      return "degraded";
  }
  return "unknown";
}

PrivacyGuarantee make_direct(double epsilon, double delta) {
  check_base(epsilon, delta);
  Provenance p;
  p.method = CompositionMethod::direct;
  p.base_epsilon = epsilon;
  p.base_delta = delta;
  return finish(epsilon, delta, std::move(p));
}

PrivacyGuarantee compose_filtered(double epsilon, double delta, double alpha,
                                  double delta_prime) {
  check_base(epsilon, delta);
  check_delta_prime(delta_prime);
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw Error(ErrorCode::invalid_params, "alpha must lie in (0, 1]");
  }
  Provenance p;
  p.method = CompositionMethod::filtered;
  p.base_epsilon = epsilon;
  p.base_delta = delta;
  p.delta_prime = delta_prime;
  p.alpha = alpha;
  return finish(epsilon, composed_delta(epsilon, delta, delta_prime, 1.0 / alpha),
                std::move(p));
}

PrivacyGuarantee compose_unfiltered(double epsilon, double delta,
                                    int participation, int i_prime,
                                    double delta_prime) {
  check_base(epsilon, delta);
  check_delta_prime(delta_prime);
  if (i_prime < 1 || i_prime > participation) {
    throw Error(ErrorCode::invalid_params,
                "surviving cap must lie in [1, participation]");
  }
  const double amplification = std::sqrt(static_cast<double>(participation) /
                                         static_cast<double>(i_prime));
  Provenance p;
  p.method = CompositionMethod::unfiltered;
  p.base_epsilon = epsilon;
  p.base_delta = delta;
  p.delta_prime = delta_prime;
  p.i_prime = i_prime;
  p.participation = participation;
  return finish(epsilon,
                composed_delta(epsilon, delta, delta_prime, amplification),
                std::move(p));
}

PrivacyGuarantee degrade(double epsilon, double delta, double alpha,
                         double delta_prime, double overrun) {
  check_base(epsilon, delta);
  check_delta_prime(delta_prime);
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw Error(ErrorCode::invalid_params, "alpha must lie in (0, 1]");
  }
  if (!(overrun > 1.0)) {
    throw Error(ErrorCode::invalid_c,
                "overrun factor must exceed 1; use compose_filtered otherwise");
  }
  const double scaled_epsilon = std::sqrt(overrun) * epsilon;
  Provenance p;
  p.method = CompositionMethod::degraded;
  p.base_epsilon = epsilon;
  p.base_delta = delta;
  p.delta_prime = delta_prime;
  p.alpha = alpha;
  p.overrun = overrun;
  return finish(scaled_epsilon,
                composed_delta(scaled_epsilon, delta, delta_prime, 1.0 / alpha),
                std::move(p));
}

double recompute_delta_total(const Provenance& p) {
  switch (p.method) {
    case CompositionMethod::direct:
      return p.base_delta;
    case CompositionMethod::filtered:
      return composed_delta(p.base_epsilon, p.base_delta, p.delta_prime,
                            1.0 / *p.alpha);
    case CompositionMethod::unfiltered:
      return composed_delta(p.base_epsilon, p.base_delta, p.delta_prime,
                            std::sqrt(static_cast<double>(*p.participation) /
                                      static_cast<double>(*p.i_prime)));
    case CompositionMethod::degraded: {
      const double scaled = std::sqrt(p.overrun) * p.base_epsilon;
      return composed_delta(scaled, p.base_delta, p.delta_prime,
                            1.0 / *p.alpha);
    }
  }
  throw Error(ErrorCode::invalid_params, "unknown composition method");
}

BudgetSolution budget_solve(double epsilon_target, double delta_target,
                            const filters::FilterStats& stats, double rate) {
  check_base(epsilon_target, delta_target);
  const double half = delta_target / 2.0;
  // Penalty delta' * (e^(eps/alpha) - e^eps) is nonincreasing in alpha and
  // identically zero at alpha = 1, so a bisection for the smallest alpha
  // fitting half the budget always succeeds.
  const auto penalty = [&](double a) {
    return sensitivity::chernoff_delta(stats, rate, a) *
           (std::exp(epsilon_target / a) - std::exp(epsilon_target));
  };
  const double alpha = sensitivity::bisect_nonincreasing(
      penalty, std::sqrt(rate), 1.0, half, 1e-6);

  BudgetSolution out;
  out.alpha = alpha;
  out.base_delta = half;
  out.delta_prime = sensitivity::chernoff_delta(stats, rate, alpha);
  out.guarantee =
      compose_filtered(epsilon_target, half, alpha, out.delta_prime);
  if (out.guarantee.delta_total > delta_target) {
    throw Error(ErrorCode::unsatisfiable,
                "recomposed delta exceeds the target budget");
  }
  return out;
}

BudgetSolution budget_solve(double epsilon_target, double delta_target,
                            int participation, double rate) {
  check_base(epsilon_target, delta_target);
  if (participation < 1) {
    throw Error(ErrorCode::invalid_params, "participation must be positive");
  }
  const double half = delta_target / 2.0;
  const double n = static_cast<double>(participation);
  const auto penalty = [&](int cap) {
    return sensitivity::binomial_tail_delta(participation, rate, cap) *
           (std::exp(std::sqrt(n / static_cast<double>(cap)) * epsilon_target) -
            std::exp(epsilon_target));
  };
  // Penalty is nonincreasing in the cap and zero at cap == participation.
  int lo = 1;
  int hi = participation;
  if (penalty(lo) <= half) {
    hi = lo;
  } else {
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (penalty(mid) <= half) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }

  BudgetSolution out;
  out.i_prime = hi;
  out.base_delta = half;
  out.delta_prime = sensitivity::binomial_tail_delta(participation, rate, hi);
  out.guarantee =
      compose_unfiltered(epsilon_target, half, participation, hi, out.delta_prime);
  if (out.guarantee.delta_total > delta_target) {
    throw Error(ErrorCode::unsatisfiable,
                "recomposed delta exceeds the target budget");
  }
  return out;
}

}  // namespace dpts::accounting
