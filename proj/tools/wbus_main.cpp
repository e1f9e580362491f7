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

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wbus/wbus.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

std::optional<wbus::Variant> variant_from_flag(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  if (flag == "wn") return wbus::Variant::WN;
  if (flag == "wn1") return wbus::Variant::WN1;
  throw wbus::ConfigError("--variant must be wn or wn1, got `" + flag + "`");
}

/// Emit a CSV either to a file (atomically) or to stdout.
void emit(const std::string& csv, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    wbus::write_text_atomic(out_path, csv);
    std::cout << "wrote " << out_path << "\n";
  }
}

/// Scales the per-qubit arrays of a base device to a different register
/// size by replicating the first qubit's values (shift defaults to zero
/// when the base has a single qubit).
wbus::DeviceConfig device_for_n(const wbus::DeviceConfig& base, int n) {
  wbus::DeviceConfig d;
  d.n_qubits = n;
  d.e10_ghz = base.e10_ghz;
  d.er_ghz = base.er_ghz;
  d.epsilon_r_ghz = base.epsilon_r_ghz;
  const double eps0 = base.epsilon_ghz.empty() ? 0.0 : base.epsilon_ghz.front();
  d.epsilon_ghz.assign(n - 1, eps0);
  d.delta_ghz.assign(n, base.delta_ghz.front());
  d.g_ghz.assign(n, base.g_ghz.front());
  d.b.assign(n, base.b.front());
  d.c.assign(n, base.c.front());
  return d;
}

wbus::StateVector starting_state(const wbus::RunConfig& run, long cap) {
  const int n = run.device.n_qubits;
  if (run.start == wbus::StartPoint::BusExcited) {
    return wbus::prepare_initial_bus_excited(n);
  }
  wbus::StateVector psi =
      wbus::ideal_flip(wbus::prepare_initial_ground(n), n);
  return wbus::transfer_pulse(psi, run.device, n,
                              wbus::default_transfer_duration_ns(run.device, n),
                              cap);
}

int cmd_protocol(const std::string& config_path, const std::string& out_path,
                 const std::string& variant_flag, long cap) {
  const auto t0 = Clock::now();
  wbus::RunConfig run = wbus::RunConfig::parse_file(config_path);
  if (auto v = variant_from_flag(variant_flag)) {
    run.variant = *v;
  }
  wbus::ProtocolOptions options;
  options.start = run.start;
  options.entangle_duration_ns = run.entangle_duration_ns;
  options.dim_cap = cap;
  const wbus::ProtocolReport report =
      wbus::run_protocol(run.device, run.variant, options);
  const double wallclock = elapsed_ms(t0);

  const int n = run.device.n_qubits;
  std::cout << "protocol run: variant " << wbus::variant_name(report.variant)
            << ", N = " << n << ", start "
            << wbus::start_point_name(report.start) << "\n";
  std::cout << "  steps:";
  for (const wbus::PulseStep& step : report.steps) {
    std::cout << " " << wbus::pulse_step_name(step.kind) << "("
              << std::fixed << std::setprecision(4) << step.duration_ns
              << " ns)";
  }
  std::cout << "\n";
  std::cout << "  fidelity = " << std::fixed << std::setprecision(4)
            << report.fidelity << "\n";
  std::cout << "  leakage = " << std::scientific << std::setprecision(3)
            << report.leakage << "\n";
  std::cout << "  residual phase = " << std::fixed << std::setprecision(4)
            << report.residual_phase_rad << " rad\n";
  std::cout << "  single-excitation amplitudes (bus, q" << n << "..q1):\n";
  const std::vector<std::string> slots = wbus::amplitude_slot_names(n);
  for (int k = 0; k <= n; ++k) {
    const wbus::Complex amp = report.single_excitation_amplitudes(k);
    std::cout << "    " << std::left << std::setw(4) << slots[k] << std::right
              << std::fixed << std::setprecision(6) << std::showpos
              << amp.real() << " " << amp.imag() << "i" << std::noshowpos
              << "   |amp| = " << std::setprecision(4) << std::abs(amp)
              << "\n";
  }
  if (!out_path.empty()) {
    wbus::write_text_atomic(out_path,
                            wbus::protocol_report_text(report, wallclock));
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_spectrum(int n, double g_ghz, const std::string& variant_flag,
                 const std::string& out_path) {
  const wbus::Variant variant =
      variant_from_flag(variant_flag).value_or(wbus::Variant::WN);
  const wbus::EffectiveModel model(n, wbus::angular_from_ghz(g_ghz), variant);
  const wbus::AnalyticSpectrum analytic = wbus::analytic_spectrum(model);
  const wbus::EigenDecomposition numeric =
      wbus::hermitian_eig(wbus::build_star_hamiltonian(model));

  double max_dev = 0.0;
  std::ostringstream csv;
  csv << "index,analytic_rad_per_ns,numeric_rad_per_ns,abs_deviation\n";
  for (int k = 0; k <= n; ++k) {
    const double dev =
        std::abs(analytic.eigenvalues(k) - numeric.eigenvalues(k));
    max_dev = std::max(max_dev, dev);
    csv << k << "," << wbus::format_double(analytic.eigenvalues(k)) << ","
        << wbus::format_double(numeric.eigenvalues(k)) << ","
        << wbus::format_double(dev) << "\n";
  }
  std::cout << "star spectrum: variant " << wbus::variant_name(variant)
            << ", N = " << n << ", g = " << g_ghz << " GHz ("
            << wbus::format_double(model.g_angular) << " rad/ns)\n"
            << "max |analytic - numeric| = " << wbus::format_double(max_dev)
            << "\n";
  emit(csv.str(), out_path);
  return 0;
}

int cmd_sweep(int n_min, int n_max, const std::string& config_path,
              const std::string& out_path, long cap) {
  if (n_min < 1 || n_max < n_min) {
    throw wbus::ConfigError("sweep needs 1 <= N_MIN <= N_MAX");
  }
  const wbus::RunConfig run = wbus::RunConfig::parse_file(config_path);
  std::ostringstream csv;
  csv << "N,t_entangle_ns,fidelity,leakage,wallclock_ms\n";
  for (int n = n_min; n <= n_max; ++n) {
    if (wbus::pow3(n + 1) > cap) {
      csv << "# truncated: N = " << n << " needs dim " << wbus::pow3(n + 1)
          << " > cap " << cap << "\n";
      std::cerr << "warning: sweep truncated at N = " << n << " (dim "
                << wbus::pow3(n + 1) << " exceeds cap " << cap << ")\n";
      break;
    }
    const auto t0 = Clock::now();
    const wbus::DeviceConfig device = device_for_n(run.device, n);
    wbus::ProtocolOptions options;
    options.start = run.start;
    options.dim_cap = cap;
    const wbus::ProtocolReport report =
        wbus::run_protocol(device, run.variant, options);
    csv << n << "," << wbus::format_double(report.entangle_duration_ns) << ","
        << wbus::format_double(report.fidelity) << ","
        << wbus::format_double(report.leakage) << ","
        << wbus::format_double(elapsed_ms(t0)) << "\n";
  }
  emit(csv.str(), out_path);
  return 0;
}

int cmd_trace(double t_max, int points, const std::string& config_path,
              const std::string& out_path, long cap) {
  const wbus::RunConfig run = wbus::RunConfig::parse_file(config_path);
  if (points == 0 && run.trace_points) {
    points = *run.trace_points;
  }
  if (points < 2) {
    throw wbus::ConfigError(
        "trace needs at least 2 points (POINTS argument or trace_points in "
        "the config)");
  }
  if (!(t_max > 0.0)) {
    throw wbus::ConfigError("trace needs t_max > 0 (degenerate grid)");
  }
  const int n = run.device.n_qubits;
  std::vector<double> grid(points);
  for (int k = 0; k < points; ++k) {
    grid[k] = t_max * static_cast<double>(k) / (points - 1);
  }
  const wbus::StateVector psi0 = starting_state(run, cap);
  const wbus::PopulationTrace trace =
      wbus::population_trace(run.device, psi0, grid, cap);

  const std::vector<std::string> slots = wbus::amplitude_slot_names(n);
  std::ostringstream csv;
  csv << "time_ns";
  for (const std::string& slot : slots) {
    csv << ",pop_" << slot;
  }
  csv << ",leakage\n";
  for (std::size_t row = 0; row < trace.times_ns.size(); ++row) {
    csv << wbus::format_double(trace.times_ns[row]);
    for (int k = 0; k <= n; ++k) {
      csv << "," << wbus::format_double(trace.populations(row, k));
    }
    csv << "," << wbus::format_double(trace.leakage[row]) << "\n";
  }
  emit(csv.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wbus: W-state generation on a multi-qubit resonator bus"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string variant_flag;
  long cap = wbus::kDefaultDimCap;
  int spectrum_n = 0;
  double spectrum_g = 0.0;
  int n_min = 1;
  int n_max = 1;
  double t_max = 0.0;
  int points = 0;

  CLI::App* protocol = app.add_subcommand(
      "protocol", "run the pulse sequence described by a config file");
  protocol->add_option("--config", config_path, "run configuration file")
      ->required();
  protocol->add_option("--out", out_path, "write a machine-readable report");
  protocol->add_option("--variant", variant_flag,
                       "override the config variant (wn|wn1)");
  protocol->add_option("--cap", cap, "Hilbert-space dimension cap");

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "analytic vs numeric star-model eigenvalues");
  spectrum->add_option("N", spectrum_n, "number of qubits")
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum->add_option("G_GHZ", spectrum_g, "coupling in GHz")->required();
  spectrum->add_option("--variant", variant_flag, "wn (default) or wn1");
  spectrum->add_option("--out", out_path, "write the table as CSV");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "protocol fidelity and entangling time across register sizes");
  sweep->add_option("N_MIN", n_min, "smallest register")->required();
  sweep->add_option("N_MAX", n_max, "largest register")->required();
  sweep->add_option("--config", config_path, "base device configuration")
      ->required();
  sweep->add_option("--out", out_path, "write the table as CSV");
  sweep->add_option("--cap", cap, "Hilbert-space dimension cap");

  CLI::App* trace = app.add_subcommand(
      "trace", "single-excitation populations along a time grid");
  trace->add_option("T_MAX", t_max, "end of the time grid in ns")->required();
  trace->add_option("POINTS", points,
                    "grid points (falls back to trace_points in the config)");
  trace->add_option("--config", config_path, "run configuration file")
      ->required();
  trace->add_option("--out", out_path, "write the series as CSV");
  trace->add_option("--cap", cap, "Hilbert-space dimension cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (protocol->parsed()) {
      return cmd_protocol(config_path, out_path, variant_flag, cap);
    }
    if (spectrum->parsed()) {
      return cmd_spectrum(spectrum_n, spectrum_g, variant_flag, out_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(n_min, n_max, config_path, out_path, cap);
    }
    if (trace->parsed()) {
      return cmd_trace(t_max, points, config_path, out_path, cap);
    }
  } catch (const wbus::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const wbus::ResourceLimitError& err) {
    std::cerr << "resource limit: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
