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

#ifndef DUDE_PRESETS_HPP_
#define DUDE_PRESETS_HPP_

#include <string>
#include <vector>

#include "dude/model.hpp"

namespace dude {

// A named, ready-to-run scenario.  These are the benchmark operating
// points the acceptance checks and the CLI sweeps are written against.
struct Preset {
  std::string name;
  std::string summary;
  NetworkConfig config;
};

// All built-in presets, in listing order.
const std::vector<Preset>& presets();

// Looks a preset up by name; throws ConfigError with the list of valid
// names when it does not exist.
const Preset& find_preset(const std::string& name);

}  // namespace dude

#endif  // DUDE_PRESETS_HPP_
