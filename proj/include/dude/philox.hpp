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
// Counter-based random numbers (Philox-4x32, 10 rounds).  Every drop of
// the simulator owns a disjoint, seed-addressed slice of the stream
// space, so results do not depend on scheduling order or thread count.

#ifndef DUDE_PHILOX_HPP_
#define DUDE_PHILOX_HPP_

#include <array>
#include <cmath>
#include <cstdint>

namespace dude {

inline constexpr uint32_t kPhiloxW32A = 0x9E3779B9u;
inline constexpr uint32_t kPhiloxW32B = 0xBB67AE85u;
inline constexpr uint32_t kPhiloxM4x32A = 0xD2511F53u;
inline constexpr uint32_t kPhiloxM4x32B = 0xCD9E8D57u;
inline constexpr int kPhiloxRounds = 10;

// One block: encrypt a 128-bit counter under a 64-bit key.
constexpr std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> ctr,
                                             uint32_t key0, uint32_t key1) {
  for (int round = 0; round < kPhiloxRounds; ++round) {
    const uint64_t p0 = static_cast<uint64_t>(kPhiloxM4x32A) * ctr[0];
    const uint64_t p1 = static_cast<uint64_t>(kPhiloxM4x32B) * ctr[2];
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
    const uint32_t lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
    const uint32_t lo1 = static_cast<uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key0, lo1, hi0 ^ ctr[3] ^ key1, lo0};
    key0 += kPhiloxW32A;
    key1 += kPhiloxW32B;
  }
  return ctr;
}

// Sequential reader over one stream.  The counter layout is
//   (drop low 32, drop high 32, stream | salt << 16, block),
// keyed by the 64-bit seed, which gives every (seed, drop, stream,
// salt) tuple an independent sequence of 2^32 blocks.
class PhiloxRng {
 public:
  PhiloxRng(uint64_t seed, uint64_t drop, uint16_t stream, uint16_t salt = 0)
      : key0_(static_cast<uint32_t>(seed)),
        key1_(static_cast<uint32_t>(seed >> 32)),
        c0_(static_cast<uint32_t>(drop)),
        c1_(static_cast<uint32_t>(drop >> 32)),
        c2_(static_cast<uint32_t>(stream) |
            (static_cast<uint32_t>(salt) << 16)) {}

  uint32_t next_u32() {
    if (word_ == 4) {
      block_values_ = philox4x32({c0_, c1_, c2_, block_}, key0_, key1_);
      ++block_;
      word_ = 0;
    }
    return block_values_[word_++];
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_uniform() {
    const uint64_t hi = next_u32();
    const uint64_t lo = next_u32();
    const uint64_t bits = ((hi << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

  // Exponential(1); -log keeps the argument in (0, 1], so the result is
  // finite and >= 0.
  double next_exp() { return -std::log1p(-next_uniform()); }

  // Gamma(shape, 1) for small integer shapes, as a sum of exponentials.
  double next_gamma(int shape) {
    double sum = 0.0;
    for (int i = 0; i < shape; ++i) sum += next_exp();
    return sum;
  }

  // A pair of independent standard normals (Box-Muller).
  std::array<double, 2> next_normal_pair() {
    const double r = std::sqrt(2.0 * next_exp());
    const double theta = 2.0 * M_PI * next_uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  // Poisson(mean): inversion by uniform products for small means, the
  // transformed-rejection sampler for large ones.
  uint64_t next_poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 10.0) {
      const double limit = std::exp(-mean);
      uint64_t count = 0;
      double product = next_uniform();
      while (product > limit) {
        ++count;
        product *= next_uniform();
      }
      return count;
    }
    // Transformed rejection with squeeze (PTRS).
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
      const double u = next_uniform() - 0.5;
      const double v = next_uniform();
      const double us = 0.5 - std::fabs(u);
      const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (us >= 0.07 && v <= v_r) return static_cast<uint64_t>(k);
      if (k < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
          k * log_mean - mean - std::lgamma(k + 1.0)) {
        return static_cast<uint64_t>(k);
      }
    }
  }

 private:
  uint32_t key0_, key1_;
  uint32_t c0_, c1_, c2_;
  uint32_t block_ = 0;
  std::array<uint32_t, 4> block_values_{};
  int word_ = 4;  // forces a refill on first use
};

}  // namespace dude

#endif  // DUDE_PHILOX_HPP_
