// Copyright 2026 The dudekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dude/load.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dude/analytic.hpp"
#include "dude/errors.hpp"
#include "scene.hpp"

namespace dude {
namespace {

constexpr double kShape = 3.5;
constexpr double kTailMass = 1e-8;      // stop once cumulative >= 1 - this
constexpr int kMaxLoadTerms = 4000000;  // hard stop against runaway mu

double mean_users_per_station(Tier t, const NetworkConfig& cfg) {
  const double a_k = tier_assoc_probability(t, cfg);
  const double lambda_k = (t == Tier::kMacro) ? cfg.macro.density
                                              : cfg.femto.density;
  return cfg.ue_density * a_k / lambda_k;
}

}  // namespace

LoadModel load_pmf(Tier t, const NetworkConfig& cfg) {
  LoadModel model;
  model.mu = mean_users_per_station(t, cfg);
  model.mean_load = 1.0 + 1.28 * model.mu;
  const double mu = model.mu;

  if (mu <= 0.0) {
    throw ConfigError("load_pmf: mean user mass must be > 0");
  }

  // P(n) = 3.5^3.5 Gamma(n+3.5) mu^(n-1)
  //        / (Gamma(3.5) (n-1)! (mu+3.5)^(n+3.5)),  n >= 1,
  // evaluated through logs; the terms decay geometrically with ratio
  // mu / (mu + 3.5) once n >> mu, so truncation is safe.
  const double log_prefix = kShape * std::log(kShape) - std::lgamma(kShape);
  const double log_mu = std::log(mu);
  const double log_mu_shape = std::log(mu + kShape);

  double cumulative = 0.0;
  for (int n = 1; n <= kMaxLoadTerms; ++n) {
    const double log_p = log_prefix + std::lgamma(n + kShape) +
                         (n - 1) * log_mu - std::lgamma(static_cast<double>(n)) -
                         (n + kShape) * log_mu_shape;
    const double p = std::exp(log_p);
    model.pmf.push_back(p);
    cumulative += p;
    if (cumulative >= 1.0 - kTailMass) {
      return model;
    }
  }
  throw NumericError("load_pmf: pmf did not reach its mass target within " +
                     std::to_string(kMaxLoadTerms) + " terms (mu = " +
                     std::to_string(mu) + ")");
}

double rate_coverage(Tier t, const NetworkConfig& cfg, double rho,
                     LoadMode mode, IntegrationLimits limits) {
  if (!(std::isfinite(rho) && rho >= 0.0)) {
    throw ConfigError("rate_coverage: rate threshold must be finite and >= 0");
  }
  if (!(std::isfinite(cfg.bandwidth_hz) && cfg.bandwidth_hz > 0.0)) {
    throw ConfigError("rate_coverage: bandwidth must be finite and > 0");
  }
  const LoadModel model = load_pmf(t, cfg);

  // SIR threshold equivalent to rate threshold rho under load n:
  // tau(n) = 2^(rho n / W) - 1, computed as expm1 to keep precision at
  // small arguments.  Loads large enough to overflow the threshold
  // contribute zero coverage.
  const auto threshold_for = [&](double load) {
    return std::expm1(M_LN2 * rho * load / cfg.bandwidth_hz);
  };

  const internal::TierScene scene = internal::resolve_scene(cfg, t);

  if (mode == LoadMode::kMean) {
    const double tau = threshold_for(model.mean_load);
    if (!std::isfinite(tau)) return 0.0;
    return internal::sir_coverage_from_scene(scene, tau, limits);
  }
  const bool moment_path =
      scene.eta == 1.0 && limits == IntegrationLimits::kInfinite;
  LaplaceExponent le;
  if (moment_path) {
    // The conditional success probability is distance-free here, and
    // its two distance moments do not depend on the threshold, so one
    // exponent serves every load level in the pmf sum.
    le = internal::make_exponent_from_scene(scene, 1.0, limits);
  }

  double total = 0.0;
  for (size_t i = 0; i < model.pmf.size(); ++i) {
    const double tau = threshold_for(static_cast<double>(i + 1));
    double coverage;
    if (!std::isfinite(tau)) {
      break;  // threshold overflowed; it only grows from here
    } else if (tau == 0.0) {
      coverage = 1.0;
    } else if (moment_path) {
      coverage = mrc_success_probability(le, tau, scene.n_k);
    } else {
      coverage = internal::sir_coverage_from_scene(scene, tau, limits);
    }
    total += model.pmf[i] * coverage;
    // Coverage decays monotonically with load, so once it underflows
    // the remaining tail (total mass <= 1) cannot move the sum.
    if (coverage < 1e-15) break;
  }
  return std::min(1.0, std::max(0.0, total));
}

double network_rate_coverage(const NetworkConfig& cfg, double rho,
                             LoadMode mode, IntegrationLimits limits) {
  const double a_m = tier_assoc_probability(Tier::kMacro, cfg);
  const double a_f = tier_assoc_probability(Tier::kFemto, cfg);
  return a_m * rate_coverage(Tier::kMacro, cfg, rho, mode, limits) +
         a_f * rate_coverage(Tier::kFemto, cfg, rho, mode, limits);
}

}  // namespace dude
