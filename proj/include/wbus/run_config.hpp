// Copyright 2026 The wbus Authors
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

#ifndef WBUS_RUN_CONFIG_HPP_
#define WBUS_RUN_CONFIG_HPP_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wbus/dynamics.hpp"

namespace wbus {

struct KeyValueLine {
  int line_number = 0;
  std::string key;
  std::string value;
};

inline std::string trim_copy(const std::string& s) {
  const auto is_space = [](unsigned char ch) { return std::isspace(ch) != 0; };
  auto begin = s.begin();
  auto end = s.end();
  while (begin != end && is_space(*begin)) ++begin;
  while (end != begin && is_space(*(end - 1))) --end;
  return std::string(begin, end);
}

/// Reads the flat `key = value` grammar shared by config and report files:
/// one pair per line, '#' starts a comment, blank lines are skipped.
inline std::vector<KeyValueLine> read_key_value_lines(
    std::istream& in, const std::string& source_name) {
  std::vector<KeyValueLine> lines;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string stripped = trim_copy(raw);
    if (stripped.empty()) {
      continue;
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << source_name << ":" << line_number
          << ": expected `key = value`, got `" << stripped << "`";
      throw ConfigError(msg.str());
    }
    KeyValueLine kv;
    kv.line_number = line_number;
    kv.key = trim_copy(stripped.substr(0, eq));
    kv.value = trim_copy(stripped.substr(eq + 1));
    if (kv.key.empty()) {
      std::ostringstream msg;
      msg << source_name << ":" << line_number << ": empty key";
      throw ConfigError(msg.str());
    }
    lines.push_back(std::move(kv));
  }
  return lines;
}

namespace detail {

inline double parse_double(const std::string& value, const std::string& key,
                           int line, const std::string& source) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    std::ostringstream msg;
    msg << source << ":" << line << ": field `" << key
        << "` expects a number, got `" << value << "`";
    throw ConfigError(msg.str());
  }
  return out;
}

inline int parse_int(const std::string& value, const std::string& key,
                     int line, const std::string& source) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    std::ostringstream msg;
    msg << source << ":" << line << ": field `" << key
        << "` expects an integer, got `" << value << "`";
    throw ConfigError(msg.str());
  }
  return static_cast<int>(out);
}

/// Comma list broadcast rule: a single number fills all `want` slots, a
/// list must match the length exactly.
inline std::vector<double> parse_list(const std::string& value,
                                      std::size_t want,
                                      const std::string& key, int line,
                                      const std::string& source) {
  std::vector<double> items;
  std::string piece;
  std::istringstream stream(value);
  while (std::getline(stream, piece, ',')) {
    items.push_back(parse_double(trim_copy(piece), key, line, source));
  }
  if (items.size() == 1 && want != 1) {
    items.assign(want, items[0]);
  }
  if (items.size() != want) {
    std::ostringstream msg;
    msg << source << ":" << line << ": field `" << key << "` expects "
        << want << " comma-separated values (or one to broadcast), got "
        << items.size();
    throw ConfigError(msg.str());
  }
  return items;
}

inline std::string lower_copy(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

}  // namespace detail

/// File-backed run description. Frequencies carry their unit in the key
/// name; unknown or duplicate keys are rejected with a line diagnostic.
struct RunConfig {
  DeviceConfig device;
  Variant variant = Variant::WN;
  StartPoint start = StartPoint::BusExcited;
  std::optional<double> entangle_duration_ns;
  std::optional<int> trace_points;

  static RunConfig parse(std::istream& in, const std::string& source_name) {
    std::map<std::string, KeyValueLine> fields;
    for (const KeyValueLine& kv : read_key_value_lines(in, source_name)) {
      const auto [it, inserted] = fields.emplace(kv.key, kv);
      if (!inserted) {
        std::ostringstream msg;
        msg << source_name << ":" << kv.line_number << ": duplicate key `"
            << kv.key << "` (first at line " << it->second.line_number << ")";
        throw ConfigError(msg.str());
      }
    }

    const auto take = [&fields](const std::string& key)
        -> std::optional<KeyValueLine> {
      auto it = fields.find(key);
      if (it == fields.end()) {
        return std::nullopt;
      }
      KeyValueLine kv = it->second;
      fields.erase(it);
      return kv;
    };
    const auto require = [&take, &source_name](const std::string& key) {
      std::optional<KeyValueLine> kv = take(key);
      if (!kv) {
        throw ConfigError(source_name + ": missing required field `" + key +
                          "`");
      }
      return *kv;
    };

    RunConfig cfg;
    {
      const KeyValueLine kv = require("n_qubits");
      cfg.device.n_qubits =
          detail::parse_int(kv.value, kv.key, kv.line_number, source_name);
      if (cfg.device.n_qubits < 1) {
        std::ostringstream msg;
        msg << source_name << ":" << kv.line_number
            << ": n_qubits must be >= 1, got " << cfg.device.n_qubits;
        throw ConfigError(msg.str());
      }
    }
    const std::size_t n = static_cast<std::size_t>(cfg.device.n_qubits);
    {
      const KeyValueLine kv = require("E10_GHz");
      cfg.device.e10_ghz =
          detail::parse_double(kv.value, kv.key, kv.line_number, source_name);
    }
    {
      const KeyValueLine kv = require("Er_GHz");
      cfg.device.er_ghz =
          detail::parse_double(kv.value, kv.key, kv.line_number, source_name);
    }
    {
      const KeyValueLine kv = require("Delta_GHz");
      cfg.device.delta_ghz =
          detail::parse_list(kv.value, n, kv.key, kv.line_number, source_name);
    }
    {
      const KeyValueLine kv = require("g_GHz");
      cfg.device.g_ghz =
          detail::parse_list(kv.value, n, kv.key, kv.line_number, source_name);
    }
    {
      const KeyValueLine kv = require("b");
      cfg.device.b =
          detail::parse_list(kv.value, n, kv.key, kv.line_number, source_name);
    }
    {
      const KeyValueLine kv = require("c");
      cfg.device.c =
          detail::parse_list(kv.value, n, kv.key, kv.line_number, source_name);
    }
    if (std::optional<KeyValueLine> kv = take("epsilon_GHz")) {
      cfg.device.epsilon_ghz = detail::parse_list(
          kv->value, n - 1, kv->key, kv->line_number, source_name);
    } else {
      cfg.device.epsilon_ghz.assign(n - 1, 0.0);
    }
    if (std::optional<KeyValueLine> kv = take("epsilon_r_GHz")) {
      cfg.device.epsilon_r_ghz = detail::parse_double(
          kv->value, kv->key, kv->line_number, source_name);
    }
    if (std::optional<KeyValueLine> kv = take("variant")) {
      const std::string v = detail::lower_copy(kv->value);
      if (v == "wn") {
        cfg.variant = Variant::WN;
      } else if (v == "wn1") {
        cfg.variant = Variant::WN1;
      } else {
        std::ostringstream msg;
        msg << source_name << ":" << kv->line_number
            << ": field `variant` must be WN or WN1, got `" << kv->value
            << "`";
        throw ConfigError(msg.str());
      }
    }
    if (std::optional<KeyValueLine> kv = take("start")) {
      const std::string v = detail::lower_copy(kv->value);
      if (v == "full_protocol") {
        cfg.start = StartPoint::FullProtocol;
      } else if (v == "bus_excited") {
        cfg.start = StartPoint::BusExcited;
      } else {
        std::ostringstream msg;
        msg << source_name << ":" << kv->line_number
            << ": field `start` must be full_protocol or bus_excited, got `"
            << kv->value << "`";
        throw ConfigError(msg.str());
      }
    }
    if (std::optional<KeyValueLine> kv = take("entangle_duration_ns")) {
      cfg.entangle_duration_ns = detail::parse_double(
          kv->value, kv->key, kv->line_number, source_name);
    }
    if (std::optional<KeyValueLine> kv = take("trace_points")) {
      const int points = detail::parse_int(kv->value, kv->key,
                                           kv->line_number, source_name);
      if (points < 2) {
        std::ostringstream msg;
        msg << source_name << ":" << kv->line_number
            << ": trace_points must be >= 2, got " << points;
        throw ConfigError(msg.str());
      }
      cfg.trace_points = points;
    }

    if (!fields.empty()) {
      const KeyValueLine& kv = fields.begin()->second;
      std::ostringstream msg;
      msg << source_name << ":" << kv.line_number << ": unknown key `"
          << kv.key << "`";
      throw ConfigError(msg.str());
    }

    try {
      cfg.device.validate();
    } catch (const std::invalid_argument& err) {
      throw ConfigError(source_name + ": " + err.what());
    }
    return cfg;
  }

  static RunConfig parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open config file `" + path + "`");
    }
    return parse(in, path);
  }
};

}  // namespace wbus

#endif  // WBUS_RUN_CONFIG_HPP_
