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
#include <cstdint>
#include <string>

#include "dude/errors.hpp"
#include "dude/partitions.hpp"

namespace dude {
namespace {

// Largest n whose partition coefficients n!/(prod b_j! (j!)^b_j) are
// computed in exact integer arithmetic.  12! = 479001600 and every
// coefficient divides n!, so uint64 never overflows below this.
constexpr int kExactCoeffLimit = 12;

std::uint64_t factorial_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

double coefficient(const Partition& p) {
  if (p.n <= kExactCoeffLimit) {
    std::uint64_t denom = 1;
    for (int j = 1; j <= p.n; ++j) {
      const int b = p.multiplicity[j - 1];
      if (b == 0) continue;
      denom *= factorial_u64(b);
      const std::uint64_t jf = factorial_u64(j);
      for (int r = 0; r < b; ++r) denom *= jf;
    }
    return static_cast<double>(factorial_u64(p.n)) /
           static_cast<double>(denom);
  }
  double log_coeff = std::lgamma(p.n + 1.0);
  for (int j = 1; j <= p.n; ++j) {
    const int b = p.multiplicity[j - 1];
    if (b == 0) continue;
    log_coeff -= std::lgamma(b + 1.0) + b * std::lgamma(j + 1.0);
  }
  return std::exp(log_coeff);
}

}  // namespace

double faa_di_bruno_exp(int n, const std::vector<double>& f_derivs) {
  if (n < 0 || n > kMaxPartitionOrder) {
    throw NumericError("faa_di_bruno_exp: order " + std::to_string(n) +
                       " outside [0, " +
                       std::to_string(kMaxPartitionOrder) + "]");
  }
  if (f_derivs.size() < static_cast<std::size_t>(n) + 1) {
    throw NumericError(
        "faa_di_bruno_exp: need derivatives 0.." + std::to_string(n) +
        ", got " + std::to_string(f_derivs.size()) + " entries");
  }
  const double outer = std::exp(f_derivs[0]);
  if (n == 0) return outer;
  double sum = 0.0;
  for (const Partition& p : partitions(n)) {
    double prod = coefficient(p);
    for (int j = 1; j <= n; ++j) {
      const int b = p.multiplicity[j - 1];
      for (int r = 0; r < b; ++r) prod *= f_derivs[j];
    }
    sum += prod;
  }
  return outer * sum;
}

}  // namespace dude
