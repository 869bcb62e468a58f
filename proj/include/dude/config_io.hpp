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

#ifndef DUDE_CONFIG_IO_HPP_
#define DUDE_CONFIG_IO_HPP_

#include <string>

#include "dude/model.hpp"

namespace dude {

// Plain key = value network description.  Lines are either blank,
// comments starting with '#', or one of exactly these keys:
//
//   lambda_m   macro station density per km^2
//   lambda_f   femto station density per km^2
//   lambda_u   user density per km^2
//   p_m_dbm    macro downlink power, dBm
//   p_f_dbm    femto downlink power, dBm
//   p0_dbm_hz  uplink baseline power density, dBm/Hz
//   n_m        macro antennas per station
//   n_f        femto antennas per station
//   bias_db    femto uplink association bias, dB (macro is the 0 dB
//              reference; ignored by the coupled mode)
//   eta        fractional power-control exponent, in [0, 1]
//   alpha_m    macro path-loss exponent, > 2
//   alpha_f    femto path-loss exponent, > 2
//   w_hz       bandwidth, Hz
//   mode       association mode: "DUDe" (decoupled uplink) or "No-DUDe"
//              (uplink reuses the downlink station); case-insensitive
//
// Every key is required exactly once.  All diagnostics are thrown as
// ConfigError with a "<origin>:<line>: <message>" prefix so they can be
// jumped to like compiler errors; whole-file problems (e.g. a missing
// key) point at the line past the end.

// Parses the file at `path`.
NetworkConfig parse_config(const std::string& path);

// Parses an in-memory config; `origin` labels diagnostics.
NetworkConfig parse_config_text(const std::string& text,
                                const std::string& origin);

// Canonical text form of a configuration; parsing it back yields the
// same configuration.
std::string serialize_config(const NetworkConfig& cfg);

}  // namespace dude

#endif  // DUDE_CONFIG_IO_HPP_
