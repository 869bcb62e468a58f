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

#include "dude/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dude/errors.hpp"
#include "dude/laplace.hpp"
#include "dude/quadrature.hpp"
#include "scene.hpp"

namespace dude {
namespace internal {

double weighted_win_probability(double lambda_a, double alpha_a,
                                double lambda_b, double alpha_b,
                                double weight) {
  // Substituting u = X sqrt(pi lambda_a) turns the own-tier factor
  // into exp(-u^2), so a fixed [0, 8] window captures the integral to
  // well below the quadrature tolerance regardless of densities.
  const double cross = M_PI * lambda_b * std::pow(weight, 2.0 / alpha_b) /
                       std::pow(M_PI * lambda_a, alpha_a / alpha_b);
  const double p = 2.0 * alpha_a / alpha_b;
  QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-15;
  const IntegrationResult r = integrate(
      [cross, p](double u) {
        return 2.0 * u * std::exp(-u * u - cross * std::pow(u, p));
      },
      {0.0, kGaussTail}, spec);
  return std::min(1.0, std::max(0.0, r.value));
}

TierScene resolve_scene(const NetworkConfig& cfg, Tier tier) {
  const AssociationLaw law = resolve_law(cfg);
  const Tier other = (tier == Tier::kMacro) ? Tier::kFemto : Tier::kMacro;
  const TierConfig& k = cfg.tier(tier);
  const TierConfig& j = cfg.tier(other);

  TierScene scene;
  scene.tier = tier;
  scene.lambda_k = k.density;
  scene.lambda_j = j.density;
  scene.alpha_k = k.alpha;
  scene.alpha_j = j.alpha;
  scene.zeta = law.zeta(tier);
  scene.eta = cfg.eta;
  scene.n_k = k.antennas;
  scene.a_k = weighted_win_probability(scene.lambda_k, scene.alpha_k,
                                       scene.lambda_j, scene.alpha_j,
                                       scene.zeta);
  scene.a_j = weighted_win_probability(scene.lambda_j, scene.alpha_j,
                                       scene.lambda_k, scene.alpha_k,
                                       1.0 / scene.zeta);
  return scene;
}

double sir_coverage_from_scene(const TierScene& scene, double tau,
                               IntegrationLimits limits) {
  if (!(std::isfinite(tau) && tau >= 0.0)) {
    throw ConfigError("sir_coverage: threshold must be finite and >= 0");
  }
  if (tau == 0.0) {
    return 1.0;  // interference is finite almost surely, so SIR > 0
  }

  // Full power control with unbounded interferer placement makes the
  // conditional success probability distance-free: the serving distance
  // drops out of both the threshold scaling and the interference law
  // once the distance moments are folded in, so the outer mixture
  // integral collapses to a single evaluation.
  if (scene.eta == 1.0 && limits == IntegrationLimits::kInfinite) {
    const LaplaceExponent le = make_exponent_from_scene(scene, 1.0, limits);
    return mrc_success_probability(le, tau, scene.n_k);
  }

  const double scale = std::sqrt(M_PI * scene.lambda_k);
  const double cross =
      M_PI * scene.lambda_j * std::pow(scene.zeta, 2.0 / scene.alpha_j) /
      std::pow(M_PI * scene.lambda_k, scene.alpha_k / scene.alpha_j);
  const double p = 2.0 * scene.alpha_k / scene.alpha_j;
  const double s_exp = scene.alpha_k * (1.0 - scene.eta);

  QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  spec.abs_tol = 1e-12;
  spec.max_subdivisions = 400;
  const IntegrationResult r = integrate(
      [&](double u) {
        const double x = u / scale;
        const double s = tau * std::pow(x, s_exp);
        const LaplaceExponent le = make_exponent_from_scene(scene, x, limits);
        const double success = mrc_success_probability(le, s, scene.n_k);
        return 2.0 * u * std::exp(-u * u - cross * std::pow(u, p)) * success;
      },
      {0.0, kGaussTail}, spec);
  const double value = r.value / scene.a_k;
  return std::min(1.0, std::max(0.0, value));
}

}  // namespace internal

double case_probability(AssociationCase c, const NetworkConfig& cfg) {
  const AssociationLaw law = resolve_law(cfg);
  const double lm = cfg.macro.density;
  const double lf = cfg.femto.density;
  const double am = cfg.macro.alpha;
  const double af = cfg.femto.alpha;

  switch (c) {
    case AssociationCase::kMacroBoth:
      return internal::weighted_win_probability(lm, am, lf, af, law.upsilon1);
    case AssociationCase::kMacroDlFemtoUl: {
      // Difference of two femto-side win probabilities; exact in real
      // arithmetic, so only rounding noise can push it negative.  A
      // coupled uplink makes the two boundaries coincide and the region
      // empty.
      const double outer =
          internal::weighted_win_probability(lf, af, lm, am, law.upsilon_p1);
      const double inner =
          internal::weighted_win_probability(lf, af, lm, am, law.upsilon_p2);
      const double diff = outer - inner;
      if (diff < -1e-9) {
        throw NumericError(
            "case_probability: mixed-association mass is negative (" +
            std::to_string(diff) + "); weight ordering is inconsistent");
      }
      return std::max(0.0, diff);
    }
    case AssociationCase::kFemtoBoth:
      return internal::weighted_win_probability(lf, af, lm, am,
                                                law.upsilon_p2);
  }
  throw ConfigError("case_probability: unknown association case");
}

double tier_assoc_probability(Tier t, const NetworkConfig& cfg) {
  return internal::resolve_scene(cfg, t).a_k;
}

std::function<double(double)> serving_distance_pdf(Tier t,
                                                   const NetworkConfig& cfg) {
  const internal::TierScene s = internal::resolve_scene(cfg, t);
  const double norm = 2.0 * M_PI * s.lambda_k / s.a_k;
  const double own = M_PI * s.lambda_k;
  const double cross = M_PI * s.lambda_j * std::pow(s.zeta, 2.0 / s.alpha_j);
  const double p = 2.0 * s.alpha_k / s.alpha_j;
  return [norm, own, cross, p](double x) {
    if (!(x >= 0.0)) {
      throw ConfigError("serving_distance_pdf: distance must be >= 0");
    }
    return norm * x * std::exp(-own * x * x - cross * std::pow(x, p));
  };
}

double sir_coverage(Tier t, const NetworkConfig& cfg, double tau,
                    IntegrationLimits limits) {
  return internal::sir_coverage_from_scene(internal::resolve_scene(cfg, t),
                                           tau, limits);
}

double network_sir_coverage(const NetworkConfig& cfg, double tau,
                            IntegrationLimits limits) {
  const double a_m = tier_assoc_probability(Tier::kMacro, cfg);
  const double a_f = tier_assoc_probability(Tier::kFemto, cfg);
  return a_m * sir_coverage(Tier::kMacro, cfg, tau, limits) +
         a_f * sir_coverage(Tier::kFemto, cfg, tau, limits);
}

}  // namespace dude
