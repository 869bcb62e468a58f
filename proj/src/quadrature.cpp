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

#include "dude/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "dude/errors.hpp"

namespace dude {
namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].  Positive abscissae
// only; the rule is symmetric.  Even indices belong to the Kronrod
// extension, odd indices are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double lo, hi;
  double value;
  double error;
};

struct SegmentWorse {
  bool operator()(const Segment& a, const Segment& b) const {
    return a.error < b.error;
  }
};

// One Gauss-Kronrod 7/15 pass over [lo, hi].
Segment evaluate(const std::function<double(double)>& f, double lo,
                 double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double kronrod = kWgk[7] * f(center);
  double gauss = kWg[3] * f(center);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 != 0) gauss += kWg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f,
                            Interval domain, const QuadratureSpec& spec) {
  if (std::isnan(domain.lo) || std::isnan(domain.hi)) {
    throw NumericError("integrate: NaN integration bound");
  }
  std::function<double(double)> g;
  Interval dom = domain;
  if (spec.transform == IntegralTransform::kSemiInfinite) {
    if (!std::isinf(domain.hi)) {
      throw NumericError(
          "integrate: semi-infinite transform requires an infinite upper "
          "bound");
    }
    const double lo = domain.lo;
    const std::function<double(double)>& inner = f;
    g = [lo, &inner](double t) {
      const double om = 1.0 - t;
      return inner(lo + t / om) / (om * om);
    };
    dom = {0.0, 1.0};
  } else {
    if (std::isinf(domain.lo) || std::isinf(domain.hi)) {
      throw NumericError(
          "integrate: infinite bound without a matching transform");
    }
    g = f;
  }
  if (dom.lo == dom.hi) return {0.0, 0.0, 0};

  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> queue;
  Segment whole = evaluate(g, dom.lo, dom.hi);
  double total = whole.value;
  double total_err = whole.error;
  queue.push(whole);

  const double scale = std::abs(dom.hi - dom.lo);
  int splits = 0;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (splits >= spec.max_subdivisions) {
      std::ostringstream os;
      os << "integrate: error " << total_err << " still above tolerance after "
         << splits << " subdivisions";
      throw NumericError(os.str());
    }
    Segment worst = queue.top();
    // Nothing splittable beyond floating-point resolution: accept the
    // estimate only if it is already within a relaxed margin; otherwise
    // report failure rather than spin.
    if (worst.hi - worst.lo < 1e-14 * scale) {
      std::ostringstream os;
      os << "integrate: interval [" << worst.lo << ", " << worst.hi
         << "] no longer splittable with error " << total_err;
      throw NumericError(os.str());
    }
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = evaluate(g, worst.lo, mid);
    Segment right = evaluate(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }
  return {total, total_err, splits};
}

}  // namespace dude
