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

#include "dude/faa_di_bruno.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "dude/errors.hpp"
#include "oracles.hpp"

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_SUITE("faa") {

TEST_CASE("all-ones derivatives reproduce the Bell numbers") {
  // With f(s) = e^s - 1 at s = 0 every f^(j) is 1 and f(0) = 0, and
  // d^n/ds^n exp(f) at 0 is the n-th Bell number.
  const auto bells = oracles::bell_numbers(24);
  std::vector<double> derivs(25, 1.0);
  derivs[0] = 0.0;
  for (int n = 0; n <= 24; ++n) {
    CAPTURE(n);
    const double got = dude::faa_di_bruno_exp(n, derivs);
    const double want = static_cast<double>(bells[n]);
    CHECK(rel_err(got, want) < ((n <= 12) ? 1e-15 : 1e-11));
  }
}

TEST_CASE("exponential of a linear function") {
  // f(s) = c s  =>  d^n/ds^n exp(f) = c^n exp(c s).
  for (double c : {-1.0, -0.37, 2.5}) {
    const double s = 0.8;
    std::vector<double> derivs(13, 0.0);
    derivs[0] = c * s;
    derivs[1] = c;
    for (int n = 0; n <= 12; ++n) {
      CAPTURE(c);
      CAPTURE(n);
      CHECK(rel_err(dude::faa_di_bruno_exp(n, derivs),
                    std::pow(c, n) * std::exp(c * s)) < 1e-13);
    }
  }
}

TEST_CASE("gaussian: exp(-s^2/2) has the Hermite recurrence") {
  // f = -s^2/2, f' = -s, f'' = -1.  d^n/ds^n exp(f) = (-1)^n He_n(s) exp(f).
  const double s = 1.3;
  std::vector<double> derivs(11, 0.0);
  derivs[0] = -0.5 * s * s;
  derivs[1] = -s;
  derivs[2] = -1.0;
  // He_{n+1} = s He_n - n He_{n-1}
  double he0 = 1.0, he1 = s;
  const double e = std::exp(-0.5 * s * s);
  CHECK(rel_err(dude::faa_di_bruno_exp(0, derivs), e) < 1e-14);
  CHECK(rel_err(dude::faa_di_bruno_exp(1, derivs), -s * e) < 1e-14);
  for (int n = 2; n <= 10; ++n) {
    const double he2 = s * he1 - (n - 1) * he0;
    he0 = he1;
    he1 = he2;
    const double want = ((n % 2 == 0) ? 1.0 : -1.0) * he2 * e;
    CAPTURE(n);
    CHECK(rel_err(dude::faa_di_bruno_exp(n, derivs), want) < 1e-12);
  }
}

TEST_CASE("matches finite differences of an explicit composite") {
  // f(s) = ln(1 + s^2), so exp(f) = 1 + s^2 with trivially known
  // derivatives: d^0 = 1+s^2, d^1 = 2s, d^2 = 2, d^n = 0 beyond.
  const double s = 0.7;
  auto f_deriv = [s](int j) -> double {
    // Derivatives of ln(1+s^2) computed from the series of the
    // logarithm's derivative chain; evaluate by finite differences of
    // the scalar function instead of hand algebra.
    auto f = [](double x) { return std::log(1.0 + x * x); };
    if (j == 0) return f(s);
    return static_cast<double>(
        oracles::central_derivative(f, s, j, (j <= 2) ? 1e-4 : 2e-2));
  };
  std::vector<double> derivs;
  for (int j = 0; j <= 4; ++j) derivs.push_back(f_deriv(j));
  CHECK(rel_err(dude::faa_di_bruno_exp(0, derivs), 1.0 + s * s) < 1e-12);
  CHECK(rel_err(dude::faa_di_bruno_exp(1, derivs), 2.0 * s) < 1e-7);
  CHECK(std::abs(dude::faa_di_bruno_exp(2, derivs) - 2.0) < 1e-4);
  CHECK(std::abs(dude::faa_di_bruno_exp(3, derivs)) < 1e-2);
}

TEST_CASE("input validation") {
  std::vector<double> three(3, 1.0);
  CHECK_THROWS_AS(dude::faa_di_bruno_exp(3, three), dude::NumericError);
  CHECK_THROWS_AS(dude::faa_di_bruno_exp(-1, three), dude::NumericError);
  std::vector<double> big(40, 1.0);
  CHECK_THROWS_AS(dude::faa_di_bruno_exp(33, big), dude::NumericError);
  CHECK(dude::faa_di_bruno_exp(0, std::vector<double>{2.0}) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-14));
}

}  // TEST_SUITE
