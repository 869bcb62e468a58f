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
//
// Each corollary below assembles its restricted closed form from the
// primitive layers (hypergeometric kernel, quadrature, set partitions)
// without calling the general evaluator, so cross-checks between the
// two exercise genuinely different code paths.

#include "dude/corollaries.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dude/errors.hpp"
#include "dude/faa_di_bruno.hpp"
#include "dude/hyp2f1.hpp"
#include "dude/partitions.hpp"
#include "dude/quadrature.hpp"
#include "scene.hpp"

namespace dude {
namespace {

constexpr double kRelSlack = 1e-9;
constexpr double kEtaSlack = 1e-12;

bool nearly(double a, double b) {
  return std::fabs(a - b) <= kRelSlack * std::max(std::fabs(a), std::fabs(b));
}

double f1_kernel(double alpha, double z) {
  const double t = 2.0 / alpha;
  return hyp2f1(1.0, 1.0 - t, 2.0 - t, z);
}

double fk_kernel(double alpha, int k, double z) {
  const double t = 2.0 / alpha;
  return hyp2f1(k + 1.0, k - t, k + 1.0 - t, z);
}

double dfactorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Sum_{n<N} (-s)^n / n! * d^n/ds^n exp(f) from the exponent derivatives.
double success_from_derivs(const std::vector<double>& derivs, double s,
                           int n_antennas) {
  double total = 0.0;
  for (int n = 0; n < n_antennas; ++n) {
    double term;
    if (n == 0) {
      term = std::exp(derivs[0]);
    } else {
      const double dln = faa_di_bruno_exp(n, derivs);
      if (dln == 0.0 || s == 0.0) {
        term = 0.0;
      } else {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        term = sign * std::pow(s, n) / dfactorial(n) * dln;
      }
    }
    total += std::max(0.0, term);
  }
  return std::min(1.0, std::max(0.0, total));
}

struct TierView {
  double lambda_k, lambda_j, alpha_k, alpha_j, zeta;
  int n_k;
};

TierView view(const NetworkConfig& cfg, const AssociationLaw& law, Tier t) {
  const Tier other = (t == Tier::kMacro) ? Tier::kFemto : Tier::kMacro;
  const TierConfig& k = cfg.tier(t);
  const TierConfig& j = cfg.tier(other);
  return {k.density, j.density, k.alpha, j.alpha, law.zeta(t), k.antennas};
}

// ---------------------------------------------------------------------
// id 1: no power control.  Exponent derivatives reduce to two kernel
// evaluations at the tier exclusion radii; only the outer
// distance-mixture integral remains.

double cor1_tier(const TierView& v, double tau, double a_k) {
  const double alpha = v.alpha_k;
  const double t2 = 2.0 / alpha;
  const double cross_c = M_PI * v.lambda_j * std::pow(v.zeta, 2.0 / v.alpha_j);
  const double p = 2.0 * v.alpha_k / v.alpha_j;
  const double trunc = internal::kGaussTail / std::sqrt(M_PI * v.lambda_k);

  QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  spec.abs_tol = 1e-12;
  spec.max_subdivisions = 400;
  const IntegrationResult r = integrate(
      [&](double x) {
        const double pdf = 2.0 * M_PI * v.lambda_k / a_k * x *
                           std::exp(-M_PI * v.lambda_k * x * x -
                                    cross_c * std::pow(x, p));
        const double s = tau * std::pow(x, alpha);
        const double v0 =
            std::pow(v.zeta * std::pow(x, alpha), 1.0 / v.alpha_j);
        std::vector<double> derivs(static_cast<size_t>(v.n_k), 0.0);
        derivs[0] = -2.0 * M_PI * s / (alpha - 2.0) *
                    (v.lambda_k * std::pow(x, 2.0 - alpha) *
                         f1_kernel(alpha, -s * std::pow(x, -alpha)) +
                     v.lambda_j * std::pow(v0, 2.0 - alpha) *
                         f1_kernel(alpha, -s * std::pow(v0, -alpha)));
        for (int k = 1; k < v.n_k; ++k) {
          const double sign = (k % 2 == 0) ? 1.0 : -1.0;
          derivs[static_cast<size_t>(k)] =
              sign * 2.0 * M_PI * dfactorial(k) / (alpha * (k - t2)) *
              (v.lambda_k * std::pow(x, 2.0 - alpha * k) *
                   fk_kernel(alpha, k, -s * std::pow(x, -alpha)) +
               v.lambda_j * std::pow(v0, 2.0 - alpha * k) *
                   fk_kernel(alpha, k, -s * std::pow(v0, -alpha)));
        }
        return pdf * success_from_derivs(derivs, s, v.n_k);
      },
      {0.0, trunc}, spec);
  return std::min(1.0, std::max(0.0, r.value));
}

// ---------------------------------------------------------------------
// id 2: full power control.  The two distance moments are evaluated
// here on the untruncated half-line through the rational map, a
// deliberately different quadrature route from the general evaluator.

double cor2_moment(double lambda_a, double alpha_a, double lambda_b,
                   double alpha_b, double zeta_a, double a_a, double q) {
  const double cross = M_PI * lambda_b * std::pow(zeta_a, 2.0 / alpha_b);
  const double p = 2.0 * alpha_a / alpha_b;
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-280;
  spec.transform = IntegralTransform::kSemiInfinite;
  const IntegrationResult r = integrate(
      [&](double x) {
        if (x <= 0.0) return 0.0;
        return std::exp(std::log(2.0 * M_PI * lambda_a / a_a) +
                        (1.0 + q) * std::log(x) - M_PI * lambda_a * x * x -
                        cross * std::pow(x, p));
      },
      {0.0, std::numeric_limits<double>::infinity()}, spec);
  return r.value;
}

double cor2_tier(const TierView& v, double tau, double a_k, double a_j) {
  const double alpha = v.alpha_k;
  const double t2 = 2.0 / alpha;
  const double m_k =
      cor2_moment(v.lambda_k, v.alpha_k, v.lambda_j, v.alpha_j, v.zeta, a_k,
                  2.0);
  const double m_j =
      cor2_moment(v.lambda_j, v.alpha_j, v.lambda_k, v.alpha_k, 1.0 / v.zeta,
                  a_j, 2.0 * v.alpha_j / v.alpha_k);

  std::vector<double> derivs(static_cast<size_t>(v.n_k), 0.0);
  derivs[0] = -2.0 * M_PI * tau / (alpha - 2.0) *
              (v.lambda_k * m_k * f1_kernel(alpha, -tau) +
               v.lambda_j * std::pow(v.zeta, 1.0 - t2) * m_j *
                   f1_kernel(alpha, -tau * v.zeta));
  for (int k = 1; k < v.n_k; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    derivs[static_cast<size_t>(k)] =
        sign * 2.0 * M_PI * dfactorial(k) / (alpha * (k - t2)) *
        (v.lambda_k * m_k * fk_kernel(alpha, k, -tau) +
         v.lambda_j * std::pow(v.zeta, k - t2) * m_j *
             fk_kernel(alpha, k, -tau * v.zeta));
  }
  return success_from_derivs(derivs, tau, v.n_k);
}

// ---------------------------------------------------------------------
// id 5 (also serves id 3 at eta == 0): merged single-tier process with
// no power control.  Every Faa di Bruno block contributes a Gaussian
// moment, so the distance mixture integrates in closed form and the
// whole evaluation is partitions + kernel values.

double cor5_tier(double lambda, double alpha, double tau, int n_antennas) {
  const double t2 = 2.0 / alpha;
  const double f1 = f1_kernel(alpha, -tau);
  const double c = 2.0 * M_PI * lambda * tau * f1 / (alpha - 2.0);
  const double pl = M_PI * lambda;

  std::vector<double> d(static_cast<size_t>(n_antennas), 0.0);
  for (int j = 1; j < n_antennas; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    d[static_cast<size_t>(j)] = sign * dfactorial(j) * 2.0 * M_PI * lambda /
                                (alpha * (j - t2)) * fk_kernel(alpha, j, -tau);
  }

  double total = pl / (pl + c);  // n = 0 term
  for (int n = 1; n < n_antennas; ++n) {
    const double tau_n = std::pow(-tau, n);
    for (const Partition& part : partitions(n)) {
      double product = tau_n;
      for (int j = 1; j <= n; ++j) {
        const int b = part.multiplicity[static_cast<size_t>(j - 1)];
        if (b == 0) continue;
        product *= std::pow(d[static_cast<size_t>(j)], b) /
                   (dfactorial(b) * std::pow(dfactorial(j), b));
      }
      product *= pl * dfactorial(part.k) / std::pow(pl + c, part.k + 1);
      total += std::max(0.0, product);
    }
  }
  return std::min(1.0, std::max(0.0, total));
}

// ---------------------------------------------------------------------
// id 3 at eta > 0: merged single-tier process with power control.

double cor3_tier(double lambda, double alpha, double eta, double tau,
                 int n_antennas) {
  const double t2 = 2.0 / alpha;
  const double trunc = internal::kGaussTail / std::sqrt(M_PI * lambda);

  if (eta == 1.0) {
    // Rayleigh second moment is exact: E[X^2] = 1 / (pi lambda), which
    // cancels the density entirely.
    std::vector<double> derivs(static_cast<size_t>(n_antennas), 0.0);
    derivs[0] = -2.0 * tau / (alpha - 2.0) * f1_kernel(alpha, -tau);
    for (int k = 1; k < n_antennas; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      derivs[static_cast<size_t>(k)] = sign * 2.0 * dfactorial(k) /
                                       (alpha * (k - t2)) *
                                       fk_kernel(alpha, k, -tau);
    }
    return success_from_derivs(derivs, tau, n_antennas);
  }

  const double decay = alpha * (1.0 - eta);
  const auto averaged = [&](int k, double s) {
    const double pw = (k == 0) ? 2.0 - decay : 2.0 - decay * k;
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    spec.abs_tol = 1e-280;
    spec.max_subdivisions = 2000;
    const IntegrationResult r = integrate(
        [&](double x) {
          const double arg = -s * std::pow(x, -decay);
          const double kern =
              (k == 0) ? f1_kernel(alpha, arg) : fk_kernel(alpha, k, arg);
          if (kern <= 0.0) return 0.0;
          return std::exp(std::log(2.0 * M_PI * lambda) +
                          (1.0 + pw) * std::log(x) - M_PI * lambda * x * x +
                          std::log(kern));
        },
        {0.0, trunc}, spec);
    return r.value;
  };

  QuadratureSpec outer;
  outer.rel_tol = 1e-8;
  outer.abs_tol = 1e-12;
  outer.max_subdivisions = 400;
  const IntegrationResult r = integrate(
      [&](double x) {
        const double s = tau * std::pow(x, decay);
        std::vector<double> derivs(static_cast<size_t>(n_antennas), 0.0);
        derivs[0] = -2.0 * M_PI * s / (alpha - 2.0) * lambda * averaged(0, s);
        for (int k = 1; k < n_antennas; ++k) {
          const double sign = (k % 2 == 0) ? 1.0 : -1.0;
          derivs[static_cast<size_t>(k)] = sign * 2.0 * M_PI * dfactorial(k) /
                                           (alpha * (k - t2)) * lambda *
                                           averaged(k, s);
        }
        return 2.0 * M_PI * lambda * x * std::exp(-M_PI * lambda * x * x) *
               success_from_derivs(derivs, s, n_antennas);
      },
      {0.0, trunc}, outer);
  return std::min(1.0, std::max(0.0, r.value));
}

// ---------------------------------------------------------------------
// id 6: single-antenna tiers without power control; elementary ratio.

double cor6_tier(const TierView& v, double alpha, double tau) {
  const double z22 = std::pow(v.zeta, 2.0 / alpha);
  const double weight_mass = v.lambda_k + z22 * v.lambda_j;
  const double kernel_mass =
      v.lambda_k * f1_kernel(alpha, -tau) +
      v.lambda_j * std::pow(v.zeta, 2.0 / alpha - 1.0) *
          f1_kernel(alpha, -tau / v.zeta);
  return weight_mass /
         (weight_mass + 2.0 * tau / (alpha - 2.0) * kernel_mass);
}

}  // namespace

double corollary_coverage(int id, const NetworkConfig& cfg, double tau) {
  if (id < 1 || id > 7) {
    throw ConfigError("corollary_coverage: id must be in 1..7, got " +
                      std::to_string(id));
  }
  if (!(std::isfinite(tau) && tau >= 0.0)) {
    throw ConfigError(
        "corollary_coverage: threshold must be finite and >= 0");
  }
  const AssociationLaw law = resolve_law(cfg);
  const double eta = cfg.eta;
  const double alpha_m = cfg.macro.alpha;
  const double alpha_f = cfg.femto.alpha;
  const bool equal_alpha = nearly(alpha_m, alpha_f);
  const bool equal_weights = nearly(law.ul_weight_m, law.ul_weight_f);

  const auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      throw HypothesisError("corollary " + std::to_string(id) + " requires " +
                            what);
    }
  };

  switch (id) {
    case 1:
      require(std::fabs(eta) <= kEtaSlack, "eta == 0");
      break;
    case 2:
      require(std::fabs(eta - 1.0) <= kEtaSlack, "eta == 1");
      break;
    case 3:
      require(equal_alpha, "equal path-loss exponents");
      require(equal_weights, "equal uplink association weights");
      break;
    case 4:
      require(equal_alpha, "equal path-loss exponents");
      require(equal_weights, "equal uplink association weights");
      require(cfg.macro.antennas == cfg.femto.antennas,
              "equal antenna counts");
      break;
    case 5:
      require(std::fabs(eta) <= kEtaSlack, "eta == 0");
      require(equal_alpha, "equal path-loss exponents");
      require(equal_weights, "equal uplink association weights");
      break;
    case 6:
      require(std::fabs(eta) <= kEtaSlack, "eta == 0");
      require(equal_alpha, "equal path-loss exponents");
      require(cfg.macro.antennas == 1 && cfg.femto.antennas == 1,
              "single-antenna tiers");
      break;
    case 7:
      require(std::fabs(eta) <= kEtaSlack, "eta == 0");
      require(equal_alpha, "equal path-loss exponents");
      require(cfg.macro.antennas == 1 && cfg.femto.antennas == 1,
              "single-antenna tiers");
      require(equal_weights, "equal uplink association weights");
      break;
    default:
      break;
  }
  if (tau == 0.0) return 1.0;

  const TierView vm = view(cfg, law, Tier::kMacro);
  const TierView vf = view(cfg, law, Tier::kFemto);
  const double lambda = cfg.macro.density + cfg.femto.density;

  switch (id) {
    case 1: {
      const internal::TierScene sm = internal::resolve_scene(cfg, Tier::kMacro);
      const internal::TierScene sf = internal::resolve_scene(cfg, Tier::kFemto);
      return sm.a_k * cor1_tier(vm, tau, sm.a_k) +
             sf.a_k * cor1_tier(vf, tau, sf.a_k);
    }
    case 2: {
      const internal::TierScene sm = internal::resolve_scene(cfg, Tier::kMacro);
      const internal::TierScene sf = internal::resolve_scene(cfg, Tier::kFemto);
      return sm.a_k * cor2_tier(vm, tau, sm.a_k, sm.a_j) +
             sf.a_k * cor2_tier(vf, tau, sf.a_k, sf.a_j);
    }
    case 3: {
      const double a_m = cfg.macro.density / lambda;
      const double a_f = cfg.femto.density / lambda;
      if (std::fabs(eta) <= kEtaSlack) {
        return a_m * cor5_tier(lambda, alpha_m, tau, vm.n_k) +
               a_f * cor5_tier(lambda, alpha_m, tau, vf.n_k);
      }
      return a_m * cor3_tier(lambda, alpha_m, eta, tau, vm.n_k) +
             a_f * cor3_tier(lambda, alpha_m, eta, tau, vf.n_k);
    }
    case 4:
      if (std::fabs(eta) <= kEtaSlack) {
        return cor5_tier(lambda, alpha_m, tau, vm.n_k);
      }
      return cor3_tier(lambda, alpha_m, eta, tau, vm.n_k);
    case 5: {
      const double a_m = cfg.macro.density / lambda;
      const double a_f = cfg.femto.density / lambda;
      return a_m * cor5_tier(lambda, alpha_m, tau, vm.n_k) +
             a_f * cor5_tier(lambda, alpha_m, tau, vf.n_k);
    }
    case 6: {
      const double a_m =
          vm.lambda_k / (vm.lambda_k + std::pow(vm.zeta, 2.0 / alpha_m) *
                                           vm.lambda_j);
      const double a_f =
          vf.lambda_k / (vf.lambda_k + std::pow(vf.zeta, 2.0 / alpha_m) *
                                           vf.lambda_j);
      return a_m * cor6_tier(vm, alpha_m, tau) +
             a_f * cor6_tier(vf, alpha_m, tau);
    }
    case 7:
      return 1.0 /
             (1.0 + 2.0 * tau / (alpha_m - 2.0) * f1_kernel(alpha_m, -tau));
    default:
      break;
  }
  throw ConfigError("corollary_coverage: unreachable id");
}

}  // namespace dude
