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

#ifndef DUDE_HYP2F1_HPP_
#define DUDE_HYP2F1_HPP_

namespace dude {

// Gauss hypergeometric function 2F1(a, b; c; z) for z <= 0.
//
// The implementation targets the argument families that arise in the
// interference functionals of this library: small non-negative a and b
// that differ by a non-integer (first parameters up to a few tens), c
// slightly above b, and z running from 0 down to very large negative
// values.  Within those families the relative error is ~1e-12 or better.
//
// Evaluation strategy:
//   z == 0          -> exactly 1
//   -30 <= z < 0    -> Pfaff transformation pivoted on the larger of a, b,
//                      which maps onto a positive-term series in
//                      w = z/(z-1) in [0, 1) and avoids the catastrophic
//                      cancellation the direct alternating series suffers
//                      when the first parameter is large
//   z < -30         -> inversion z -> 1/z via the standard connection
//                      formula, leaving two rapidly convergent series in
//                      |1/z| < 1/30
//
// Throws NumericError for z > 0, non-finite inputs, c a non-positive
// integer, series that fail to converge, and the ill-conditioned corner
// where a-b sits at (or hugs) an integer while z is too negative for the
// Pfaff route to absorb (the connection formula degenerates there).
double hyp2f1(double a, double b, double c, double z);

namespace detail {

// Pfaff-transformed series, valid for z <= 0; used below the inversion
// threshold only as a fallback when a-b is (close to) integral.
double hyp2f1_pfaff(double a, double b, double c, double z);

// Connection-formula evaluation in 1/z, valid for z < 0 when a-b is not
// integral.  Exposed so tests can check agreement of the two routes at
// the switchover.
double hyp2f1_inv_z(double a, double b, double c, double z);

// Route switchover: inputs with z below this use the 1/z formula.
inline constexpr double kInvZThreshold = -30.0;

}  // namespace detail

}  // namespace dude

#endif  // DUDE_HYP2F1_HPP_
