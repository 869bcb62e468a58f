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

#ifndef DUDE_ERRORS_HPP_
#define DUDE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dude {

// Domain violations and convergence failures in the numerical kernels
// (special functions, quadrature, series assembly).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid network description: bad parameter values, malformed config
// files, unknown keys.  Messages for file input carry "path:line:" so
// shells and editors can jump to the offending line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A specialized closed form was asked for outside the parameter regime in
// which it is valid.  The message names the condition that failed.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what)
      : std::runtime_error(what) {}
};

// A downlink/uplink association pair that the configured weight ordering
// proves impossible was observed; indicates an inconsistent weight setup
// rather than a numerical problem.
class AssociationViolation : public std::runtime_error {
 public:
  explicit AssociationViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dude

#endif  // DUDE_ERRORS_HPP_
