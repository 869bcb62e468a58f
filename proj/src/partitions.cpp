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

#include "dude/partitions.hpp"

#include <mutex>
#include <numeric>
#include <string>

#include "dude/errors.hpp"

namespace dude {
namespace {

// Emits partitions of `remaining` using parts of size <= `part`, filling
// the shared multiplicity scratch.  Looping the multiplicity of the
// current largest part in ascending order yields exactly the documented
// ordering: the count of the largest part changes slowest.
void emit(int part, int remaining, std::vector<int>* scratch,
          std::vector<Partition>* out, int n) {
  if (part == 1) {
    (*scratch)[0] = remaining;
    Partition p;
    p.multiplicity = *scratch;
    p.n = n;
    p.k = std::accumulate(scratch->begin(), scratch->end(), 0);
    out->push_back(std::move(p));
    (*scratch)[0] = 0;
    return;
  }
  for (int mult = 0; mult * part <= remaining; ++mult) {
    (*scratch)[part - 1] = mult;
    emit(part - 1, remaining - mult * part, scratch, out, n);
  }
  (*scratch)[part - 1] = 0;
}

std::vector<Partition> build(int n) {
  std::vector<Partition> out;
  std::vector<int> scratch(n, 0);
  emit(n, n, &scratch, &out, n);
  return out;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 1 || n > kMaxPartitionOrder) {
    throw NumericError("partitions: order " + std::to_string(n) +
                       " outside [1, " +
                       std::to_string(kMaxPartitionOrder) + "]");
  }
  static std::vector<std::vector<Partition>> cache(kMaxPartitionOrder + 1);
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache[n].empty()) cache[n] = build(n);
  return cache[n];
}

}  // namespace dude
