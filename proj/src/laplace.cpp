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

#include "dude/laplace.hpp"

#include <algorithm>
#include <cmath>
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

// Serving-distance density of a tier, written as
//   norm * X * exp(-own * X^2 - cross * X^p),
// where p = 2 alpha_serving / alpha_other.
struct PdfParams {
  double log_norm = 0.0;
  double own = 0.0;
  double cross = 0.0;
  double p = 0.0;
  double trunc = 0.0;  // radius beyond which the density is negligible
};

PdfParams serving_pdf(double lambda_a, double alpha_a, double lambda_b,
                      double alpha_b, double weight_ratio, double assoc_prob) {
  PdfParams pdf;
  pdf.log_norm = std::log(2.0 * M_PI * lambda_a / assoc_prob);
  pdf.own = M_PI * lambda_a;
  pdf.cross = M_PI * lambda_b * std::pow(weight_ratio, 2.0 / alpha_b);
  pdf.p = 2.0 * alpha_a / alpha_b;
  pdf.trunc = internal::kGaussTail / std::sqrt(M_PI * lambda_a);
  return pdf;
}

PdfParams own_tier_pdf(const LaplaceExponent& le) {
  return serving_pdf(le.lambda_k, le.alpha_k, le.lambda_j, le.alpha_j, le.zeta,
                     le.a_k);
}

PdfParams cross_tier_pdf(const LaplaceExponent& le) {
  return serving_pdf(le.lambda_j, le.alpha_j, le.lambda_k, le.alpha_k,
                     1.0 / le.zeta, le.a_j);
}

// Interference kernels after the radial integral collapses to a Gauss
// hypergeometric factor.  The index family is pinned to the serving
// tier's path-loss exponent because path loss back to the tagged
// station always follows that exponent.
double kernel_first(double alpha_k, double z) {
  const double t = 2.0 / alpha_k;
  return hyp2f1(1.0, 1.0 - t, 2.0 - t, z);
}

double kernel_order(double alpha_k, int k, double z) {
  const double t = 2.0 / alpha_k;
  return hyp2f1(k + 1.0, k - t, k + 1.0 - t, z);
}

// Int_0^upper pdf(X) * X^extra_pow * Fk(-coeff * X^-decay) dX, with the
// integrand assembled in log space: individual factors such as
// X^extra_pow overflow on their own near the origin even though the
// product tends to zero there.
double averaged_kernel(const PdfParams& pdf, double upper, double extra_pow,
                       double coeff, double decay, double alpha_k, int k) {
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-280;  // effectively pure relative; underflow ends cleanly
  spec.max_subdivisions = 2000;
  const IntegrationResult r = integrate(
      [&](double x) {
        const double lx = std::log(x);
        const double arg = -coeff * std::pow(x, -decay);
        const double kernel =
            (k == 0) ? kernel_first(alpha_k, arg) : kernel_order(alpha_k, k, arg);
        if (kernel <= 0.0) {
          return 0.0;  // kernel underflowed; the true factor is positive
        }
        const double log_val = pdf.log_norm + (1.0 + extra_pow) * lx -
                               pdf.own * x * x - pdf.cross * std::pow(x, pdf.p) +
                               std::log(kernel);
        return std::exp(log_val);
      },
      {0.0, upper}, spec);
  return r.value;
}

double distance_moment(const PdfParams& pdf, double q) {
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-280;
  const IntegrationResult r = integrate(
      [&](double x) {
        return std::exp(pdf.log_norm + (1.0 + q) * std::log(x) -
                        pdf.own * x * x - pdf.cross * std::pow(x, pdf.p));
      },
      {0.0, pdf.trunc}, spec);
  return r.value;
}

double factorial_as_double(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void validate_exponent(const LaplaceExponent& le) {
  if (!(le.lambda_k > 0.0 && le.lambda_j > 0.0 && le.alpha_k > 2.0 &&
        le.alpha_j > 2.0 && le.zeta > 0.0 && le.a_k > 0.0 && le.a_j > 0.0 &&
        le.eta >= 0.0 && le.eta <= 1.0 && le.x > 0.0)) {
    throw ConfigError("laplace: exponent state is not fully resolved");
  }
}

}  // namespace

namespace internal {

LaplaceExponent make_exponent_from_scene(const TierScene& scene, double x,
                                         IntegrationLimits limits) {
  if (!(std::isfinite(x) && x > 0.0)) {
    throw ConfigError("laplace: serving distance must be finite and > 0");
  }
  LaplaceExponent le;
  le.tier = scene.tier;
  le.x = x;
  le.limits = limits;
  le.lambda_k = scene.lambda_k;
  le.lambda_j = scene.lambda_j;
  le.alpha_k = scene.alpha_k;
  le.alpha_j = scene.alpha_j;
  le.zeta = scene.zeta;
  le.eta = scene.eta;
  le.a_k = scene.a_k;
  le.a_j = scene.a_j;
  if (le.eta == 1.0 && limits == IntegrationLimits::kInfinite) {
    // Full power control with unbounded interferer placement leaves
    // only two distance moments in the exponent; cache them so every
    // derivative order (and every threshold) reuses the same pair.
    const PdfParams own = own_tier_pdf(le);
    const PdfParams cross = cross_tier_pdf(le);
    le.moment_k = distance_moment(own, 2.0);
    le.moment_j = distance_moment(cross, 2.0 * le.alpha_j / le.alpha_k);
    le.moments_ready = true;
  }
  return le;
}

}  // namespace internal

LaplaceExponent make_laplace_exponent(const NetworkConfig& cfg, Tier tier,
                                      double x, IntegrationLimits limits) {
  const internal::TierScene scene = internal::resolve_scene(cfg, tier);
  return internal::make_exponent_from_scene(scene, x, limits);
}

std::vector<double> laplace_exponent_derivs(const LaplaceExponent& le,
                                            double s, int n) {
  validate_exponent(le);
  if (!(std::isfinite(s) && s >= 0.0)) {
    throw ConfigError("laplace: transform variable must be finite and >= 0");
  }
  if (n < 0 || n > kMaxPartitionOrder) {
    throw NumericError("laplace: derivative order " + std::to_string(n) +
                       " outside supported range [0, " +
                       std::to_string(kMaxPartitionOrder) + "]");
  }

  const double alpha = le.alpha_k;
  const double t = 2.0 / alpha;
  std::vector<double> out(static_cast<size_t>(n) + 1, 0.0);

  if (le.eta == 0.0) {
    // No power control: interferers transmit at unit power, the
    // distance mixture disappears, and every order reduces to two
    // hypergeometric evaluations at the tier exclusion radii.
    const double x = le.x;
    const double v0 = std::pow(le.zeta * std::pow(x, alpha), 1.0 / le.alpha_j);
    for (int k = 0; k <= n; ++k) {
      if (k == 0) {
        if (s == 0.0) {
          out[0] = 0.0;
          continue;
        }
        const double own = le.lambda_k * std::pow(x, 2.0 - alpha) *
                           kernel_first(alpha, -s * std::pow(x, -alpha));
        const double cross = le.lambda_j * std::pow(v0, 2.0 - alpha) *
                             kernel_first(alpha, -s * std::pow(v0, -alpha));
        out[0] = -2.0 * M_PI * s / (alpha - 2.0) * (own + cross);
      } else {
        const double own = le.lambda_k * std::pow(x, 2.0 - alpha * k) *
                           kernel_order(alpha, k, -s * std::pow(x, -alpha));
        const double cross = le.lambda_j * std::pow(v0, 2.0 - alpha * k) *
                             kernel_order(alpha, k, -s * std::pow(v0, -alpha));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        out[k] = sign * 2.0 * M_PI * factorial_as_double(k) /
                 (alpha * (k - t)) * (own + cross);
      }
    }
    return out;
  }

  if (le.moments_ready) {
    // eta == 1 with unbounded placement: kernels are distance-free, so
    // the mixture collapses onto the cached moments.
    for (int k = 0; k <= n; ++k) {
      if (k == 0) {
        if (s == 0.0) {
          out[0] = 0.0;
          continue;
        }
        const double own = le.lambda_k * le.moment_k * kernel_first(alpha, -s);
        const double cross = le.lambda_j * std::pow(le.zeta, 1.0 - t) *
                             le.moment_j * kernel_first(alpha, -s * le.zeta);
        out[0] = -2.0 * M_PI * s / (alpha - 2.0) * (own + cross);
      } else {
        const double own =
            le.lambda_k * le.moment_k * kernel_order(alpha, k, -s);
        const double cross = le.lambda_j * std::pow(le.zeta, k - t) *
                             le.moment_j * kernel_order(alpha, k, -s * le.zeta);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        out[k] = sign * 2.0 * M_PI * factorial_as_double(k) /
                 (alpha * (k - t)) * (own + cross);
      }
    }
    return out;
  }

  // General fractional power control: average the kernels over each
  // tier's serving-distance law by quadrature.
  const PdfParams own_pdf = own_tier_pdf(le);
  const PdfParams cross_pdf = cross_tier_pdf(le);
  const double one_m_eta = 1.0 - le.eta;
  const double own_decay = alpha * one_m_eta;
  const double cross_decay = le.alpha_j * one_m_eta;

  double own_upper = own_pdf.trunc;
  double cross_upper = cross_pdf.trunc;
  if (le.limits == IntegrationLimits::kServingCapped) {
    // Interfering users closer to their own station than the cap would
    // have chosen the tagged station instead; the cross-tier cap maps
    // the tagged distance through both weight and exponent ratios.
    own_upper = std::min(own_upper, le.x);
    const double cap =
        std::pow(le.zeta, (le.alpha_j + alpha) / (le.alpha_j * le.alpha_j)) *
        std::pow(le.x, alpha * alpha / (le.alpha_j * le.alpha_j));
    cross_upper = std::min(cross_upper, cap);
  }

  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      if (s == 0.0) {
        out[0] = 0.0;
        continue;
      }
      const double own =
          le.lambda_k * averaged_kernel(own_pdf, own_upper,
                                        2.0 - alpha * one_m_eta, s, own_decay,
                                        alpha, 0);
      const double cross =
          le.lambda_j * std::pow(le.zeta, 1.0 - t) *
          averaged_kernel(cross_pdf, cross_upper,
                          2.0 * le.alpha_j / alpha - le.alpha_j * one_m_eta,
                          s * le.zeta, cross_decay, alpha, 0);
      out[0] = -2.0 * M_PI * s / (alpha - 2.0) * (own + cross);
    } else {
      const double own =
          le.lambda_k * averaged_kernel(own_pdf, own_upper,
                                        2.0 - alpha * k * one_m_eta, s,
                                        own_decay, alpha, k);
      const double cross =
          le.lambda_j * std::pow(le.zeta, k - t) *
          averaged_kernel(cross_pdf, cross_upper,
                          2.0 * le.alpha_j / alpha - le.alpha_j * k * one_m_eta,
                          s * le.zeta, cross_decay, alpha, k);
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      out[k] = sign * 2.0 * M_PI * factorial_as_double(k) / (alpha * (k - t)) *
               (own + cross);
    }
  }
  return out;
}

double mrc_success_probability(const LaplaceExponent& le, double s,
                               int n_antennas) {
  if (n_antennas < 1) {
    throw ConfigError("laplace: antenna count must be >= 1");
  }
  if (n_antennas - 1 > kMaxPartitionOrder) {
    throw NumericError("laplace: antenna count " + std::to_string(n_antennas) +
                       " exceeds the supported derivative order");
  }
  const std::vector<double> derivs =
      laplace_exponent_derivs(le, s, n_antennas - 1);

  double total = 0.0;
  for (int n = 0; n < n_antennas; ++n) {
    double term;
    if (n == 0) {
      term = std::exp(derivs[0]);
    } else {
      const double dln = faa_di_bruno_exp(n, derivs);
      if (dln == 0.0 || s == 0.0) {
        term = 0.0;  // avoids inf * 0 when s^n overflows after underflow
      } else {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        term = sign * std::pow(s, n) / factorial_as_double(n) * dln;
      }
    }
    // Complete monotonicity of the transform makes every term a
    // probability mass; a materially negative term means the
    // derivative assembly broke down.
    if (term < -kProbabilityTol) {
      throw NumericError("laplace: success-probability term " +
                         std::to_string(n) + " is negative (" +
                         std::to_string(term) + ")");
    }
    total += std::max(0.0, term);
  }
  if (total > 1.0 + kProbabilityTol) {
    throw NumericError("laplace: success probability " +
                       std::to_string(total) + " exceeds 1");
  }
  return std::min(1.0, std::max(0.0, total));
}

}  // namespace dude
