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

#ifndef DUDE_PARTITIONS_HPP_
#define DUDE_PARTITIONS_HPP_

#include <vector>

namespace dude {

// One integer partition of n in multiplicity form: multiplicity[j-1] is
// the number of parts equal to j, so sum_j j * multiplicity[j-1] == n.
struct Partition {
  std::vector<int> multiplicity;  // length n
  int n = 0;                      // the partitioned integer
  int k = 0;                      // total number of parts
};

// Largest n accepted by partitions() and faa_di_bruno_exp().
inline constexpr int kMaxPartitionOrder = 32;

// All partitions of n (1 <= n <= kMaxPartitionOrder), in a fixed
// deterministic order: ascending lexicographically on the reversed
// multiplicity tuple (multiplicity of the largest part varies slowest).
// For n = 4 the order is
//   (4,0,0,0) (2,1,0,0) (0,2,0,0) (1,0,1,0) (0,0,0,1).
// The result references a lazily built process-wide cache; it stays
// valid for the lifetime of the process.
const std::vector<Partition>& partitions(int n);

}  // namespace dude

#endif  // DUDE_PARTITIONS_HPP_
