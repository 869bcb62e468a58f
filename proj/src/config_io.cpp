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

#include "dude/config_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "dude/errors.hpp"

namespace dude {
namespace {

const char* const kKeys[] = {"lambda_m", "lambda_f",  "lambda_u", "p_m_dbm",
                             "p_f_dbm",  "p0_dbm_hz", "n_m",      "n_f",
                             "bias_db",  "eta",       "alpha_m",  "alpha_f",
                             "w_hz",     "mode"};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& message) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << message;
  throw ConfigError(os.str());
}

double parse_number(const std::string& origin, int line,
                    const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    fail(origin, line, "value for '" + key + "' is not a number: '" + value +
                           "'");
  }
}

int parse_integer(const std::string& origin, int line, const std::string& key,
                  const std::string& value) {
  const double v = parse_number(origin, line, key, value);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    fail(origin, line, "value for '" + key + "' must be an integer: '" +
                           value + "'");
  }
  return i;
}

AssociationMode parse_mode(const std::string& origin, int line,
                           const std::string& value) {
  std::string v = lower(value);
  v.erase(std::remove_if(v.begin(), v.end(),
                         [](char c) { return c == '-' || c == '_'; }),
          v.end());
  if (v == "dude") return AssociationMode::kDecoupled;
  if (v == "nodude") return AssociationMode::kCoupled;
  fail(origin, line,
       "value for 'mode' must be 'DUDe' or 'No-DUDe', got '" + value + "'");
}

}  // namespace

NetworkConfig parse_config_text(const std::string& text,
                                const std::string& origin) {
  std::map<std::string, std::pair<std::string, int>> seen;  // key -> (value, line)
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string stripped = trim(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      fail(origin, line, "expected 'key = value', got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (std::find_if(std::begin(kKeys), std::end(kKeys), [&](const char* k) {
          return key == k;
        }) == std::end(kKeys)) {
      fail(origin, line, "unknown key '" + key + "'");
    }
    if (value.empty()) fail(origin, line, "empty value for '" + key + "'");
    const auto [it, inserted] = seen.emplace(key, std::make_pair(value, line));
    if (!inserted) {
      fail(origin, line,
           "duplicate key '" + key + "' (first set on line " +
               std::to_string(it->second.second) + ")");
    }
  }
  const int eof_line = line + 1;
  for (const char* key : kKeys) {
    if (seen.find(key) == seen.end()) {
      fail(origin, eof_line, std::string("missing required key '") + key +
                                 "'");
    }
  }
  auto number = [&](const char* key) {
    const auto& [value, at] = seen.at(key);
    return parse_number(origin, at, key, value);
  };
  auto integer = [&](const char* key) {
    const auto& [value, at] = seen.at(key);
    return parse_integer(origin, at, key, value);
  };

  NetworkConfig cfg;
  cfg.macro.density = number("lambda_m");
  cfg.femto.density = number("lambda_f");
  cfg.ue_density = number("lambda_u");
  cfg.macro.power_mw = dbm_to_mw(number("p_m_dbm"));
  cfg.femto.power_mw = dbm_to_mw(number("p_f_dbm"));
  cfg.p0_mw_hz = dbm_to_mw(number("p0_dbm_hz"));
  cfg.macro.antennas = integer("n_m");
  cfg.femto.antennas = integer("n_f");
  cfg.macro.bias = 1.0;
  cfg.femto.bias = db_to_linear(number("bias_db"));
  cfg.eta = number("eta");
  cfg.macro.alpha = number("alpha_m");
  cfg.femto.alpha = number("alpha_f");
  cfg.bandwidth_hz = number("w_hz");
  {
    const auto& [value, at] = seen.at("mode");
    cfg.mode = parse_mode(origin, at, value);
  }
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(origin + ":" + std::to_string(eof_line) + ": " +
                      e.what());
  }
  return cfg;
}

NetworkConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ":1: cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

std::string serialize_config(const NetworkConfig& cfg) {
  std::ostringstream os;
  os.precision(12);
  os << "lambda_m = " << cfg.macro.density << "\n"
     << "lambda_f = " << cfg.femto.density << "\n"
     << "lambda_u = " << cfg.ue_density << "\n"
     << "p_m_dbm = " << mw_to_dbm(cfg.macro.power_mw) << "\n"
     << "p_f_dbm = " << mw_to_dbm(cfg.femto.power_mw) << "\n"
     << "p0_dbm_hz = " << mw_to_dbm(cfg.p0_mw_hz) << "\n"
     << "n_m = " << cfg.macro.antennas << "\n"
     << "n_f = " << cfg.femto.antennas << "\n"
     << "bias_db = " << linear_to_db(cfg.femto.bias) << "\n"
     << "eta = " << cfg.eta << "\n"
     << "alpha_m = " << cfg.macro.alpha << "\n"
     << "alpha_f = " << cfg.femto.alpha << "\n"
     << "w_hz = " << cfg.bandwidth_hz << "\n"
     << "mode = "
     << (cfg.mode == AssociationMode::kDecoupled ? "DUDe" : "No-DUDe")
     << "\n";
  return os.str();
}

}  // namespace dude
