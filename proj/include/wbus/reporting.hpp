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

#ifndef WBUS_REPORTING_HPP_
#define WBUS_REPORTING_HPP_

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "wbus/run_config.hpp"

namespace wbus {

/// Machine-readable number format: 10 significant digits.
inline std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return std::string(buffer);
}

/// Writes via a temp file plus rename so readers never see a partial file.
inline void write_text_atomic(const std::string& path,
                              const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open `" + tmp + "` for writing");
    }
    out << content;
    if (!out) {
      throw std::runtime_error("write to `" + tmp + "` failed");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename `" + tmp + "` to `" + path + "`");
  }
}

/// Names of the single-excitation amplitude slots in report order:
/// bus first, then qubit N down to qubit 1.
inline std::vector<std::string> amplitude_slot_names(int n_qubits) {
  std::vector<std::string> names;
  names.reserve(n_qubits + 1);
  names.emplace_back("bus");
  for (int q = n_qubits; q >= 1; --q) {
    names.push_back("q" + std::to_string(q));
  }
  return names;
}

/// Serializes a protocol run as `key = value` lines. Byte-identical for
/// identical inputs except the trailing wallclock_ms line.
inline std::string protocol_report_text(const ProtocolReport& report,
                                        double wallclock_ms) {
  const int n = static_cast<int>(report.single_excitation_amplitudes.size()) - 1;
  std::ostringstream out;
  out << "# wbus protocol report\n";
  out << "variant = " << variant_name(report.variant) << "\n";
  out << "n_qubits = " << n << "\n";
  out << "start = " << start_point_name(report.start) << "\n";
  std::string names;
  std::string durations;
  for (std::size_t k = 0; k < report.steps.size(); ++k) {
    if (k > 0) {
      names += ",";
      durations += ",";
    }
    names += pulse_step_name(report.steps[k].kind);
    durations += format_double(report.steps[k].duration_ns);
  }
  out << "steps = " << names << "\n";
  out << "step_durations_ns = " << durations << "\n";
  out << "entangle_duration_ns = " << format_double(report.entangle_duration_ns)
      << "\n";
  out << "fidelity = " << format_double(report.fidelity) << "\n";
  out << "leakage = " << format_double(report.leakage) << "\n";
  out << "residual_phase_rad = " << format_double(report.residual_phase_rad)
      << "\n";
  const std::vector<std::string> slots = amplitude_slot_names(n);
  for (int k = 0; k <= n; ++k) {
    const Complex amp = report.single_excitation_amplitudes(k);
    out << "amp_" << slots[k] << "_re = " << format_double(amp.real()) << "\n";
    out << "amp_" << slots[k] << "_im = " << format_double(amp.imag()) << "\n";
  }
  out << "wallclock_ms = " << format_double(wallclock_ms) << "\n";
  return out.str();
}

/// Re-parses a report written by protocol_report_text.
inline std::map<std::string, std::string> parse_report(
    std::istream& in, const std::string& source_name) {
  std::map<std::string, std::string> fields;
  for (const KeyValueLine& kv : read_key_value_lines(in, source_name)) {
    fields[kv.key] = kv.value;
  }
  return fields;
}

}  // namespace wbus

#endif  // WBUS_REPORTING_HPP_
