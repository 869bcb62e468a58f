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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "dude/errors.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("smooth finite integrals hit tight tolerances") {
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-12;

  auto r1 = dude::integrate([](double x) { return 4.0 / (1.0 + x * x); },
                            {0.0, 1.0}, spec);
  CHECK(rel_err(r1.value, 3.14159265358979324) < 1e-12);
  CHECK(r1.error <= 1e-10);

  auto r2 = dude::integrate([](double x) { return std::exp(-x) * x; },
                            {0.0, 50.0}, spec);
  CHECK(rel_err(r2.value, 1.0) < 1e-11);
}

TEST_CASE("gaussian over the half line") {
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  spec.transform = dude::IntegralTransform::kSemiInfinite;
  auto r = dude::integrate([](double x) { return std::exp(-x * x); },
                           {0.0, kInf}, spec);
  CHECK(rel_err(r.value, 0.88622692545275801) < 1e-12);  // sqrt(pi)/2
}

TEST_CASE("half line with shifted origin") {
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  spec.transform = dude::IntegralTransform::kSemiInfinite;
  // int_2^inf x e^{-x} dx = 3 e^{-2}
  auto r = dude::integrate([](double x) { return x * std::exp(-x); },
                           {2.0, kInf}, spec);
  CHECK(rel_err(r.value, 3.0 * std::exp(-2.0)) < 1e-12);
}

TEST_CASE("integrable endpoint singularity") {
  // int_0^1 x^{-1/2} dx = 2; the integrand is infinite at 0 but the
  // Kronrod nodes never touch the endpoint.  Plain bisection gains only
  // half a digit per split on the singular cell, so ask for a tolerance
  // reachable before the width floor.
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-6;
  spec.max_subdivisions = 20000;
  auto r = dude::integrate(
      [](double x) { return 1.0 / std::sqrt(x); }, {0.0, 1.0}, spec);
  CHECK(rel_err(r.value, 2.0) < 1e-5);
}

TEST_CASE("oscillatory cancellation respects the absolute floor") {
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-10;
  auto r = dude::integrate([](double x) { return std::sin(x); },
                           {0.0, 20.0 * 3.14159265358979324}, spec);
  CHECK(std::abs(r.value) < 1e-9);
}

TEST_CASE("error estimates are honest on a mixed bag") {
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  struct Probe {
    std::function<double(double)> f;
    dude::Interval dom;
    double truth;
  };
  const Probe probes[] = {
      {[](double x) { return std::log(1.0 + x) / (1.0 + x * x); },
       {0.0, 1.0},
       0.27219826128795027},  // pi ln(2) / 8
      {[](double x) { return std::exp(-2.0 * x) * std::cos(3.0 * x); },
       {0.0, 40.0},
       2.0 / 13.0},
  };
  for (const Probe& p : probes) {
    auto r = dude::integrate(p.f, p.dom, spec);
    CHECK(std::abs(r.value - p.truth) <= std::max(r.error, 1e-12));
  }
}

TEST_CASE("budget exhaustion raises instead of returning junk") {
  dude::QuadratureSpec spec;
  spec.rel_tol = 1e-14;
  spec.abs_tol = 1e-300;
  spec.max_subdivisions = 3;
  CHECK_THROWS_AS(
      dude::integrate([](double x) { return std::pow(x, -0.9); }, {0.0, 1.0},
                      spec),
      dude::NumericError);
}

TEST_CASE("bound validation") {
  dude::QuadratureSpec spec;
  CHECK_THROWS_AS(
      dude::integrate([](double) { return 1.0; }, {0.0, kInf}, spec),
      dude::NumericError);
  spec.transform = dude::IntegralTransform::kSemiInfinite;
  CHECK_THROWS_AS(
      dude::integrate([](double) { return 1.0; }, {0.0, 5.0}, spec),
      dude::NumericError);
  CHECK_THROWS_AS(
      dude::integrate([](double) { return 1.0; },
                      {std::nan(""), 1.0}, spec),
      dude::NumericError);
}

TEST_CASE("degenerate interval is exactly zero") {
  dude::QuadratureSpec spec;
  auto r = dude::integrate([](double) { return 7.0; }, {3.0, 3.0}, spec);
  CHECK(r.value == 0.0);
  CHECK(r.error == 0.0);
}

}  // TEST_SUITE
