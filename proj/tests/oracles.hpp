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
// Slow, independent reference implementations used only by the test
// suite.  Each one deliberately takes a different route than the
// production code it checks: closed-form identities, brute-force
// enumeration, composite Simpson sums, finite differences.

#ifndef DUDE_TESTS_ORACLES_HPP_
#define DUDE_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

// Composite Simpson rule with n slices (n is rounded up to even),
// accumulated in long double.
long double simpson(const std::function<long double(long double)>& f,
                    long double a, long double b, int n);

// 2F1(a, b; b+1; z) for b > 0, z <= 0, via the Euler integral
// representation F = b * int_0^1 t^(b-1) (1 - z t)^(-a) dt, smoothed by
// the substitution t = v^(3/b) and summed with Simpson.  This covers the
// hypergeometric parameter families the library evaluates, through a
// route that shares no code or method with the production evaluator.
double hyp2f1_euler_integral(double a, double b, double z, int slices);

// 2F1(1, 1/2; 3/2; z) = atan(sqrt(-z))/sqrt(-z) for z < 0.
double hyp2f1_arctan(double z);

// 2F1(1, 1; 2; z) = -log(1-z)/z for z < 0.
double hyp2f1_log(double z);

// Number of integer partitions of n, by dynamic programming.
std::uint64_t partition_count(int n);

// All partitions of n as multiplicity vectors (index j-1 holds the
// multiplicity of part j), enumerated by a dumb recursive search and
// sorted canonically; used to cross-check the production generator's
// content independent of ordering.
std::vector<std::vector<int>> partition_multisets(int n);

// Bell numbers B_0..B_n via the Bell triangle (exact in uint64 through
// n = 24; the triangle row built for n = 25 would already overflow).
std::vector<std::uint64_t> bell_numbers(int n);

// n-th derivative of f at x by the central finite-difference stencil of
// width n+1 with step h, evaluated in long double.
long double central_derivative(const std::function<double(double)>& f,
                               double x, int order, double h);

}  // namespace oracles

#endif  // DUDE_TESTS_ORACLES_HPP_
