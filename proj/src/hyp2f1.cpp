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

#include "dude/hyp2f1.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

#include "dude/errors.hpp"

namespace dude {
namespace {

constexpr int kMaxTerms = 200000;
constexpr double kIntegerSlack = 0.05;

bool is_nonpositive_integer(double x) {
  return x <= 0.5 && std::abs(x - std::round(x)) < 1e-9;
}

std::string describe(double a, double b, double c, double z) {
  std::ostringstream os;
  os << "2F1(" << a << ", " << b << "; " << c << "; " << z << ")";
  return os.str();
}

// log|Gamma(x)| together with the sign of Gamma(x).  std::lgamma's global
// signgam is not thread-safe, so the sign is derived from the reflection
// structure: Gamma alternates sign on the unit intervals left of zero.
double log_abs_gamma(double x, int* sign) {
  *sign = 1;
  if (x > 0) return std::lgamma(x);
  // x <= 0, non-integer (callers exclude poles).
  double f = std::floor(x);
  int64_t k = static_cast<int64_t>(f);
  // Gamma is negative on (-1, 0), positive on (-2, -1), and keeps
  // alternating leftward; floor(x) is odd on the negative intervals.
  *sign = (k % 2 == 0) ? 1 : -1;
  return std::lgamma(x);
}

// Direct power series sum_{n} (a)_n (b)_n / (c)_n z^n / n!.  Only used
// for small |z| (inside the 1/z connection) and for terminating series,
// where no cancellation builds up.
double direct_series(double a, double b, double c, double z,
                     const char* ctx) {
  long double sum = 1.0L;
  long double term = 1.0L;
  int quiet = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= static_cast<long double>(a + n) * (b + n) /
            ((c + n) * (n + 1.0L)) * z;
    sum += term;
    if (std::abs(static_cast<double>(term)) <=
        1e-15 * std::abs(static_cast<double>(sum))) {
      if (++quiet >= 2) return static_cast<double>(sum);
    } else {
      quiet = 0;
    }
    if (term == 0.0L) return static_cast<double>(sum);
  }
  throw NumericError(std::string("hyp2f1: series failed to converge in ") +
                     ctx);
}

}  // namespace

namespace detail {

double hyp2f1_pfaff(double a, double b, double c, double z) {
  // Pivot on the larger first parameter: 2F1(a,b;c;z) =
  // (1-z)^(-p) 2F1(p, c-q; c; z/(z-1)) with {p,q} = {a,b}, p the larger.
  // For z <= 0 the new argument w lies in [0, 1), and when c-q > 0 every
  // series term is positive, so the sum is cancellation-free no matter
  // how large p is.
  const double p = (a >= b) ? a : b;
  const double q = (a >= b) ? b : a;
  const double w = z / (z - 1.0);
  const double bb = c - q;
  long double sum = 1.0L;
  long double term = 1.0L;
  int quiet = 0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= static_cast<long double>(p + n) * (bb + n) /
            ((c + n) * (n + 1.0L)) * w;
    sum += term;
    if (std::abs(static_cast<double>(term)) <=
        1e-15 * std::abs(static_cast<double>(sum))) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    if (term == 0.0L) break;
    if (n == kMaxTerms - 1) {
      throw NumericError("hyp2f1: Pfaff series failed to converge for " +
                         describe(a, b, c, z));
    }
  }
  return std::pow(1.0 - z, -p) * static_cast<double>(sum);
}

double hyp2f1_inv_z(double a, double b, double c, double z) {
  // 2F1(a,b;c;z) =
  //   G(c)G(b-a)/(G(b)G(c-a)) (-z)^(-a) 2F1(a, a-c+1; a-b+1; 1/z)
  // + G(c)G(a-b)/(G(a)G(c-b)) (-z)^(-b) 2F1(b, b-c+1; b-a+1; 1/z),
  // valid when a-b is not an integer.  Each inner series runs in
  // |1/z| < 1/30 and converges in a handful of terms.
  const double iz = 1.0 / z;
  const double log_mz = std::log(-z);
  int sc;
  const double lg_c = log_abs_gamma(c, &sc);

  double result = 0.0;
  // Term pivoted on a: vanishes when Gamma(c-a) sits at a pole.
  if (!is_nonpositive_integer(c - a)) {
    int sba, sb, sca;
    const double lg = lg_c + log_abs_gamma(b - a, &sba) -
                      log_abs_gamma(b, &sb) - log_abs_gamma(c - a, &sca);
    const int sign = sc * sba * sb * sca;
    const double f = direct_series(a, a - c + 1.0, a - b + 1.0, iz,
                                   "1/z connection (first term)");
    result += sign * std::exp(lg - a * log_mz) * f;
  }
  // Term pivoted on b: vanishes when Gamma(c-b) sits at a pole.
  if (!is_nonpositive_integer(c - b)) {
    int sab, sa, scb;
    const double lg = lg_c + log_abs_gamma(a - b, &sab) -
                      log_abs_gamma(a, &sa) - log_abs_gamma(c - b, &scb);
    const int sign = sc * sab * sa * scb;
    const double f = direct_series(b, b - c + 1.0, b - a + 1.0, iz,
                                   "1/z connection (second term)");
    result += sign * std::exp(lg - b * log_mz) * f;
  }
  return result;
}

}  // namespace detail

double hyp2f1(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(z)) {
    throw NumericError("hyp2f1: non-finite input in " + describe(a, b, c, z));
  }
  if (z > 0.0) {
    throw NumericError("hyp2f1: argument must satisfy z <= 0, got " +
                       describe(a, b, c, z));
  }
  if (is_nonpositive_integer(c)) {
    throw NumericError("hyp2f1: c must not be a non-positive integer in " +
                       describe(a, b, c, z));
  }
  if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;
  // Terminating series: one of the upper parameters is a non-positive
  // integer, so the sum is the exact finite polynomial.
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return direct_series(a, b, c, z, "terminating polynomial");
  }
  if (z >= detail::kInvZThreshold) {
    return detail::hyp2f1_pfaff(a, b, c, z);
  }
  const double ab = a - b;
  if (std::abs(ab - std::round(ab)) < kIntegerSlack) {
    // The connection formula degenerates for integral a-b.  The Pfaff
    // series still converges (w -> 1 from below) and stays accurate down
    // to moderately large |z|; beyond that there is no well-conditioned
    // route in this implementation.
    if (z > -1e4) return detail::hyp2f1_pfaff(a, b, c, z);
    throw NumericError(
        "hyp2f1: a-b too close to an integer for the 1/z connection at " +
        describe(a, b, c, z));
  }
  return detail::hyp2f1_inv_z(a, b, c, z);
}

}  // namespace dude
