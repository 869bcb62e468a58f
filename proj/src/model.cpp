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

#include "dude/model.hpp"

#include <cmath>
#include <sstream>

#include "dude/errors.hpp"
#include "dude/partitions.hpp"

namespace dude {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError("config: " + message);
}

void validate_tier(const TierConfig& t, const char* name) {
  std::ostringstream os;
  os << name << " tier: ";
  const std::string p = os.str();
  require(std::isfinite(t.density) && t.density > 0.0,
          p + "density must be positive and finite");
  require(std::isfinite(t.power_mw) && t.power_mw > 0.0,
          p + "transmit power must be positive and finite");
  require(t.antennas >= 1 && t.antennas <= kMaxPartitionOrder,
          p + "antenna count must lie in [1, " +
              std::to_string(kMaxPartitionOrder) + "]");
  require(std::isfinite(t.bias) && t.bias > 0.0,
          p + "bias must be positive and finite");
  require(std::isfinite(t.alpha) && t.alpha > 2.0,
          p + "path-loss exponent must exceed 2");
}

}  // namespace

void NetworkConfig::validate() const {
  validate_tier(macro, "macro");
  validate_tier(femto, "femto");
  require(std::isfinite(ue_density) && ue_density > 0.0,
          "user density must be positive and finite");
  require(std::isfinite(p0_mw_hz) && p0_mw_hz > 0.0,
          "uplink baseline power density must be positive and finite");
  require(std::isfinite(eta) && eta >= 0.0 && eta <= 1.0,
          "power-control fraction must lie in [0, 1]");
  require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0,
          "bandwidth must be positive and finite");
}

AssociationLaw resolve_law(const NetworkConfig& cfg) {
  cfg.validate();
  AssociationLaw law;
  law.alpha_m = cfg.macro.alpha;
  law.alpha_f = cfg.femto.alpha;
  law.dl_weight_m = cfg.macro.power_mw * cfg.macro.antennas;
  law.dl_weight_f = cfg.femto.power_mw * cfg.femto.antennas;
  if (cfg.mode == AssociationMode::kDecoupled) {
    law.ul_weight_m = cfg.macro.bias * cfg.macro.antennas;
    law.ul_weight_f = cfg.femto.bias * cfg.femto.antennas;
  } else {
    law.ul_weight_m = law.dl_weight_m;
    law.ul_weight_f = law.dl_weight_f;
  }
  law.ul_leans_femto = law.ul_weight_f * law.dl_weight_m >=
                       law.dl_weight_f * law.ul_weight_m;
  // The macro-both region is bounded by whichever rule hands users to
  // the femto tier more eagerly; the mixed region lies between the two
  // rules' boundaries.
  if (law.ul_leans_femto) {
    law.upsilon1 = law.ul_weight_f / law.ul_weight_m;
    law.upsilon_p1 = law.ul_weight_m / law.ul_weight_f;
    law.upsilon_p2 = law.dl_weight_m / law.dl_weight_f;
  } else {
    law.upsilon1 = law.dl_weight_f / law.dl_weight_m;
    law.upsilon_p1 = law.dl_weight_m / law.dl_weight_f;
    law.upsilon_p2 = law.ul_weight_m / law.ul_weight_f;
  }
  law.zeta_m = law.ul_weight_f / law.ul_weight_m;
  law.zeta_f = law.ul_weight_m / law.ul_weight_f;
  return law;
}

AssociationCase classify(double x_m, double x_f, const AssociationLaw& law) {
  if (!(x_m > 0.0) || !(x_f > 0.0) || !std::isfinite(x_m) ||
      !std::isfinite(x_f)) {
    throw ConfigError("classify: distances must be positive and finite");
  }
  const double pl_m = std::pow(x_m, -law.alpha_m);
  const double pl_f = std::pow(x_f, -law.alpha_f);
  const bool dl_macro = law.dl_weight_m * pl_m >= law.dl_weight_f * pl_f;
  const bool ul_macro = law.ul_weight_m * pl_m >= law.ul_weight_f * pl_f;
  if (dl_macro && ul_macro) return AssociationCase::kMacroBoth;
  if (dl_macro) return AssociationCase::kMacroDlFemtoUl;
  if (!ul_macro) return AssociationCase::kFemtoBoth;
  std::ostringstream os;
  os << "classify: downlink chose femto while uplink chose macro at x_m="
     << x_m << " x_f=" << x_f
     << "; the association enum cannot represent this pair";
  throw AssociationViolation(os.str());
}

double ul_tx_power(double x, double alpha, double eta, double p0) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ConfigError("ul_tx_power: distance must be positive and finite");
  }
  return p0 * std::pow(x, eta * alpha);
}

const char* tier_name(Tier t) {
  return t == Tier::kMacro ? "macro" : "femto";
}

const char* case_name(AssociationCase c) {
  switch (c) {
    case AssociationCase::kMacroBoth:
      return "macro-both";
    case AssociationCase::kMacroDlFemtoUl:
      return "macro-dl-femto-ul";
    case AssociationCase::kFemtoBoth:
      return "femto-both";
  }
  return "unknown";
}

}  // namespace dude
