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

#ifndef DUDE_MODEL_HPP_
#define DUDE_MODEL_HPP_

#include <cmath>
#include <string>

namespace dude {

// Two-tier network: wide-area macro cells overlaid with dense femto
// cells.  Distances are kilometres, densities are per square kilometre,
// powers are linear milliwatts.
enum class Tier { kMacro, kFemto };

// How the uplink serving station is chosen.  kDecoupled picks the uplink
// station independently of the downlink one (antenna- and bias-weighted
// strongest tier); kCoupled reuses the downlink choice.
enum class AssociationMode { kDecoupled, kCoupled };

// Joint downlink/uplink association outcome for a user.  With a
// decoupled uplink only three combinations are geometrically possible
// per weight ordering; the fourth raises AssociationViolation.
enum class AssociationCase {
  kMacroBoth = 1,       // macro serves both directions
  kMacroDlFemtoUl = 2,  // downlink on macro, uplink on femto
  kFemtoBoth = 3,       // femto serves both directions
};

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

struct TierConfig {
  double density = 0.0;   // stations per km^2
  double power_mw = 0.0;  // downlink transmit power, linear mW
  int antennas = 1;       // receive antennas per station
  double bias = 1.0;      // uplink association bias, linear (macro pins 1)
  double alpha = 4.0;     // path-loss exponent, > 2
};

struct NetworkConfig {
  TierConfig macro;
  TierConfig femto;
  double ue_density = 0.0;     // users per km^2
  double p0_mw_hz = 0.0;       // uplink baseline power density, mW per Hz
  double eta = 0.0;            // fractional power-control exponent in [0,1]
  double bandwidth_hz = 0.0;   // system bandwidth W
  AssociationMode mode = AssociationMode::kDecoupled;

  const TierConfig& tier(Tier t) const {
    return t == Tier::kMacro ? macro : femto;
  }
  TierConfig& tier(Tier t) { return t == Tier::kMacro ? macro : femto; }

  // Throws ConfigError when any parameter leaves the supported domain:
  // non-positive densities, powers, bias, or bandwidth; path-loss
  // exponents <= 2; eta outside [0, 1]; antenna counts outside [1, 32].
  // Orderings between the tiers (relative powers, antenna counts, bias
  // versus power ratios) are deliberately NOT constrained: both weight
  // orderings are legitimate operating points and all formulas handle
  // them.
  void validate() const;
};

// The association weights a configuration induces.  The downlink always
// ranks tiers by antenna-scaled transmit power; the uplink ranks by
// antenna-scaled bias when decoupled and reuses the downlink weights
// when coupled.  All derived ratios used by the closed-form layer are
// precomputed here.
struct AssociationLaw {
  double dl_weight_m = 0.0, dl_weight_f = 0.0;
  double ul_weight_m = 0.0, ul_weight_f = 0.0;
  double alpha_m = 0.0, alpha_f = 0.0;

  // True when the uplink rule favors the femto tier at least as strongly
  // as the downlink rule (weight ratios compared; ties count as true).
  // Decides which mixed downlink/uplink pair is geometrically possible
  // and which weight ratio enters each region integral.
  bool ul_leans_femto = true;

  // Region-integral weight ratios (femto/macro or macro/femto as each
  // region needs them):
  double upsilon1 = 0.0;    // macro-both region
  double upsilon_p1 = 0.0;  // mixed region, inner boundary
  double upsilon_p2 = 0.0;  // mixed region, outer boundary
  // Interfering-tier to serving-tier uplink weight ratio, per serving
  // tier: zeta_K = w_J / w_K.
  double zeta_m = 0.0, zeta_f = 0.0;

  double zeta(Tier t) const { return t == Tier::kMacro ? zeta_m : zeta_f; }
};

// Builds the association weights for a validated configuration.
AssociationLaw resolve_law(const NetworkConfig& cfg);

// Joint association for a user whose nearest macro station is at x_m km
// and nearest femto station at x_f km.  The stronger weighted received
// power wins each direction; the macro tier wins exact ties.  Throws
// AssociationViolation for the downlink-femto/uplink-macro pair, which a
// femto-leaning uplink rule makes impossible; when the uplink rule leans
// macro instead (ul_leans_femto == false) that pair genuinely occurs and
// the enum cannot express it, so callers probing such configurations
// must be prepared to catch.
AssociationCase classify(double x_m, double x_f, const AssociationLaw& law);

// Transmit power (mW) of a user at distance x km from its uplink station
// under fractional path-loss compensation: p0 * x^(eta * alpha).
double ul_tx_power(double x, double alpha, double eta, double p0);

const char* tier_name(Tier t);
const char* case_name(AssociationCase c);

}  // namespace dude

#endif  // DUDE_MODEL_HPP_
