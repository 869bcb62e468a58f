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

#include "dude/presets.hpp"

#include <string>
#include <vector>

#include "dude/errors.hpp"

namespace dude {
namespace {

// Shared radio parameters: 43 dBm macro, 20 dBm femto, -100 dBm/Hz
// uplink power-control target, 10 MHz of bandwidth, 3000 users/km^2.
NetworkConfig base_config() {
  NetworkConfig cfg;
  cfg.macro.power_mw = dbm_to_mw(43.0);
  cfg.femto.power_mw = dbm_to_mw(20.0);
  cfg.macro.bias = 1.0;
  cfg.femto.bias = 1.0;
  cfg.p0_mw_hz = dbm_to_mw(-100.0);
  cfg.bandwidth_hz = 1.0e7;
  cfg.ue_density = 3000.0;
  cfg.mode = AssociationMode::kDecoupled;
  return cfg;
}

NetworkConfig make(double lambda_m, double lambda_f, double alpha, int n_m,
                   int n_f, double femto_bias, double eta) {
  NetworkConfig cfg = base_config();
  cfg.macro.density = lambda_m;
  cfg.femto.density = lambda_f;
  cfg.macro.alpha = alpha;
  cfg.femto.alpha = alpha;
  cfg.macro.antennas = n_m;
  cfg.femto.antennas = n_f;
  cfg.femto.bias = femto_bias;
  cfg.eta = eta;
  return cfg;
}

std::vector<Preset> build() {
  std::vector<Preset> v;
  v.push_back({"fig2",
               "association-case split vs femto/macro density ratio "
               "(unbiased, 5x1 antennas)",
               make(1.0, 5.0, 4.0, 5, 1, 1.0, 0.0)});
  v.push_back({"fig3",
               "association-case split vs density ratio with a 5x uplink "
               "femto bias",
               make(1.0, 5.0, 4.0, 5, 1, 5.0, 0.0)});
  v.push_back({"fig4a",
               "coverage benchmark: 3/10 stations per km^2, 4x2 antennas, "
               "full power control",
               make(3.0, 10.0, 3.0, 4, 2, 1.0, 1.0)});
  v.push_back({"fig4b",
               "coverage benchmark: 3/10 stations per km^2, 4x2 antennas, "
               "no power control",
               make(3.0, 10.0, 3.0, 4, 2, 1.0, 0.0)});
  v.push_back({"fig4c",
               "coverage benchmark: 1/4 stations per km^2, single antennas, "
               "10 dB femto bias, full power control",
               make(1.0, 4.0, 3.0, 1, 1, db_to_linear(10.0), 1.0)});
  v.push_back({"fig4d",
               "coverage benchmark: 1/4 stations per km^2, single antennas, "
               "10 dB femto bias, no power control",
               make(1.0, 4.0, 3.0, 1, 1, db_to_linear(10.0), 0.0)});
  v.push_back({"fig5",
               "coverage vs threshold at 2/12 stations per km^2, 12x4 "
               "antennas, half power control",
               make(2.0, 12.0, 3.0, 12, 4, 1.0, 0.5)});
  v.push_back({"fig8",
               "rate benchmark: 3/18 stations per km^2, 20-antenna macros, "
               "full power control",
               make(3.0, 18.0, 3.0, 20, 1, 1.0, 1.0)});
  v.push_back({"fig10a",
               "rate-vs-bias benchmark without power control (20x2 antennas, "
               "2/10 stations per km^2)",
               make(2.0, 10.0, 3.0, 20, 2, 1.0, 0.0)});
  v.push_back({"fig10b",
               "rate-vs-bias benchmark with full power control (20x2 "
               "antennas, 2/10 stations per km^2)",
               make(2.0, 10.0, 3.0, 20, 2, 1.0, 1.0)});
  return v;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> kPresets = build();
  return kPresets;
}

const Preset& find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return p;
  }
  std::string names;
  for (const Preset& p : presets()) {
    if (!names.empty()) names += ", ";
    names += p.name;
  }
  throw ConfigError("unknown preset '" + name + "' (available: " + names + ")");
}

}  // namespace dude
