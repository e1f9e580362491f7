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

#ifndef WBUS_DYNAMICS_HPP_
#define WBUS_DYNAMICS_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "wbus/analysis.hpp"
#include "wbus/device_model.hpp"
#include "wbus/effective_model.hpp"

namespace wbus {

/// Where a protocol run begins: the full three-step sequence from the
/// ground state, or directly from the bus-excited state that steps 1-2
/// would have prepared.
enum class StartPoint { FullProtocol, BusExcited };

inline const char* start_point_name(StartPoint s) {
  return s == StartPoint::FullProtocol ? "full_protocol" : "bus_excited";
}

/// One executed pulse. Transfer steps carry exactly one active coupling,
/// entangle steps all N; the ideal flip takes no time and no coupling.
struct PulseStep {
  enum class Kind { IdealFlip, Transfer, Entangle };
  Kind kind;
  int qubit_index = 0;   // 1-based; 0 when not applicable
  double duration_ns = 0.0;
  DeviceConfig active_config;
};

inline const char* pulse_step_name(PulseStep::Kind kind) {
  switch (kind) {
    case PulseStep::Kind::IdealFlip: return "ideal_flip";
    case PulseStep::Kind::Transfer: return "transfer";
    case PulseStep::Kind::Entangle: return "entangle";
  }
  return "unknown";
}

/// Outcome of one protocol run. single_excitation_amplitudes are in the
/// (bus, qubit N, ..., qubit 1) order and reported in the single-excitation
/// rotating frame (the phase accumulated by the shared reference energy is
/// removed) multiplied by the variant's alignment phase; residual_phase_rad
/// records the spoke phase that is left, it is never optimized away.
struct ProtocolReport {
  StateVector final_state;
  Vector single_excitation_amplitudes;
  double fidelity = 0.0;
  double leakage = 0.0;
  double residual_phase_rad = 0.0;
  std::vector<PulseStep> steps;
  Variant variant = Variant::WN;
  StartPoint start = StartPoint::BusExcited;
  double entangle_duration_ns = 0.0;
};

struct ProtocolOptions {
  StartPoint start = StartPoint::BusExcited;
  std::optional<double> entangle_duration_ns;
  std::optional<double> transfer_duration_ns;
  int flip_qubit = 0;  // 0 -> qubit N, the one written next to the bus digit
  long dim_cap = kDefaultDimCap;
};

inline StateVector prepare_initial_ground(int n_qubits) {
  return StateVector::basis_state(pow3(n_qubits + 1), 0, Basis::FullProduct);
}

inline StateVector prepare_initial_bus_excited(int n_qubits) {
  return StateVector::basis_state(pow3(n_qubits + 1), 1, Basis::FullProduct);
}

inline StateVector prepare_initial_qubit_excited(int n_qubits,
                                                 int qubit_index) {
  if (qubit_index < 1 || qubit_index > n_qubits) {
    std::ostringstream msg;
    msg << "qubit index " << qubit_index << " outside 1.." << n_qubits;
    throw std::invalid_argument(msg.str());
  }
  return StateVector::basis_state(pow3(n_qubits + 1),
                                  pow3(n_qubits + 1 - qubit_index),
                                  Basis::FullProduct);
}

/// Idealized local pi pulse: swaps the |0> and |1> amplitudes of one qubit
/// across the rest of the register, leaving |2> components untouched.
/// Unitary and an involution.
inline StateVector ideal_flip(const StateVector& psi, int qubit_index) {
  if (psi.basis() != Basis::FullProduct) {
    throw ShapeError("ideal_flip acts on full product-basis states");
  }
  const int n = qubits_from_dim(psi.dim());
  if (qubit_index < 1 || qubit_index > n) {
    std::ostringstream msg;
    msg << "qubit index " << qubit_index << " outside 1.." << n;
    throw std::invalid_argument(msg.str());
  }
  const long stride = pow3(n + 1 - qubit_index);
  Vector v = psi.amplitudes();
  for (long idx = 0; idx < v.size(); ++idx) {
    if ((idx / stride) % 3 == 0) {
      std::swap(v(idx), v(idx + stride));
    }
  }
  return StateVector(std::move(v), Basis::FullProduct);
}

/// Copy of cfg with every coupling turned off except the chosen qubit's
/// (pass 0 to switch all of them off).
inline DeviceConfig config_with_single_coupling(const DeviceConfig& cfg,
                                                int qubit_index) {
  DeviceConfig step = cfg;
  for (int i = 0; i < step.n_qubits; ++i) {
    if (i + 1 != qubit_index) {
      step.g_ghz[i] = 0.0;
    }
  }
  return step;
}

/// Duration of a resonant qubit->bus transfer at coupling g: a quarter of
/// the two-level vacuum Rabi period, pi / (2 g).
inline double default_transfer_duration_ns(const DeviceConfig& cfg,
                                           int qubit_index) {
  if (qubit_index < 1 || qubit_index > cfg.n_qubits) {
    std::ostringstream msg;
    msg << "qubit index " << qubit_index << " outside 1.." << cfg.n_qubits;
    throw std::invalid_argument(msg.str());
  }
  const double g_ang = angular_from_ghz(cfg.g_ghz[qubit_index - 1]);
  if (!(g_ang > 0.0)) {
    throw std::invalid_argument(
        "transfer duration undefined for zero coupling");
  }
  return std::numbers::pi / (2.0 * g_ang);
}

/// Square pulse that moves an excitation between one qubit and the bus:
/// evolves under the network Hamiltonian with only that coupling active.
inline StateVector transfer_pulse(const StateVector& psi,
                                  const DeviceConfig& cfg, int qubit_index,
                                  double duration_ns,
                                  long dim_cap = kDefaultDimCap) {
  if (qubit_index < 1 || qubit_index > cfg.n_qubits) {
    std::ostringstream msg;
    msg << "qubit index " << qubit_index << " outside 1.." << cfg.n_qubits;
    throw std::invalid_argument(msg.str());
  }
  const DeviceConfig step = config_with_single_coupling(cfg, qubit_index);
  return evolve_eig(assemble_full_hamiltonian(step, dim_cap), psi,
                    duration_ns, dim_cap);
}

/// Square pulse with every qubit-bus coupling active.
inline StateVector entangling_pulse(const StateVector& psi,
                                    const DeviceConfig& cfg,
                                    double duration_ns,
                                    long dim_cap = kDefaultDimCap) {
  return evolve_eig(assemble_full_hamiltonian(cfg, dim_cap), psi, duration_ns,
                    dim_cap);
}

/// Raw diagonal energy of the qubit-1-excited basis state, rad/ns: the
/// reference every single-excitation state shares up to its eps shift.
/// Used as the reporting frame frequency.
inline double single_excitation_reference_energy(const DeviceConfig& cfg) {
  double acc = 0.0;
  for (int i = 1; i <= cfg.n_qubits; ++i) {
    const Matrix m = subsystem_hamiltonian_qubit(cfg, i).entries();
    acc += (i == 1 ? m(1, 1) : m(0, 0)).real();
  }
  acc += subsystem_hamiltonian_resonator(cfg).entries()(0, 0).real();
  return acc;
}

/// Executes the pulse sequence and scores the result against the variant's
/// W target. The entangle duration defaults to the star-model entangling
/// time for the qubit-1 coupling; transfer and flip steps run only from the
/// FullProtocol start.
inline ProtocolReport run_protocol(const DeviceConfig& cfg, Variant variant,
                                   const ProtocolOptions& options = {}) {
  cfg.validate();
  const int n = cfg.n_qubits;

  std::vector<PulseStep> steps;
  double evolved_ns = 0.0;
  StateVector psi = prepare_initial_bus_excited(n);
  if (options.start == StartPoint::FullProtocol) {
    const int flip_qubit = options.flip_qubit == 0 ? n : options.flip_qubit;
    psi = ideal_flip(prepare_initial_ground(n), flip_qubit);
    steps.push_back(PulseStep{PulseStep::Kind::IdealFlip, flip_qubit, 0.0,
                              config_with_single_coupling(cfg, 0)});
    const double transfer_ns = options.transfer_duration_ns.value_or(
        default_transfer_duration_ns(cfg, flip_qubit));
    psi = transfer_pulse(psi, cfg, flip_qubit, transfer_ns, options.dim_cap);
    steps.push_back(PulseStep{PulseStep::Kind::Transfer, flip_qubit,
                              transfer_ns,
                              config_with_single_coupling(cfg, flip_qubit)});
    evolved_ns += transfer_ns;
  }

  double entangle_ns = 0.0;
  if (options.entangle_duration_ns) {
    entangle_ns = *options.entangle_duration_ns;
  } else {
    entangle_ns = entangling_time(
        EffectiveModel(n, angular_from_ghz(cfg.g_ghz[0]), variant));
  }
  psi = entangling_pulse(psi, cfg, entangle_ns, options.dim_cap);
  steps.push_back(
      PulseStep{PulseStep::Kind::Entangle, 0, entangle_ns, cfg});
  evolved_ns += entangle_ns;

  const std::vector<long> indices = single_excitation_indices(n);
  const Complex frame =
      std::polar(1.0, single_excitation_reference_energy(cfg) * evolved_ns) *
      alignment_phase(n, variant);
  Vector amplitudes(n + 1);
  for (int k = 0; k <= n; ++k) {
    amplitudes(k) = frame * psi.amplitudes()(indices[k]);
  }

  const TargetState target = w_target(n, variant);
  const double run_fidelity = fidelity(psi, target);
  const double run_leakage = leakage(psi, n);
  Complex block_overlap(0.0, 0.0);
  for (int k = 0; k <= n; ++k) {
    block_overlap +=
        std::conj(target.vector.amplitudes()(indices[k])) * amplitudes(k);
  }

  return ProtocolReport{std::move(psi),
                        std::move(amplitudes),
                        run_fidelity,
                        run_leakage,
                        std::arg(block_overlap),
                        std::move(steps),
                        variant,
                        options.start,
                        entangle_ns};
}

/// Populations of the single-excitation states plus leakage along a time
/// grid, evolving psi0 under the network Hamiltonian of cfg. One row per
/// grid point; each row sums to 1 up to unitarity error.
struct PopulationTrace {
  std::vector<double> times_ns;
  Eigen::MatrixXd populations;  // rows: times; cols: (bus, qN, ..., q1)
  std::vector<double> leakage;
};

inline PopulationTrace population_trace(const DeviceConfig& cfg,
                                        const StateVector& psi0,
                                        const std::vector<double>& t_grid_ns,
                                        long dim_cap = kDefaultDimCap) {
  if (t_grid_ns.empty()) {
    throw std::invalid_argument("population_trace requires a non-empty grid");
  }
  for (std::size_t k = 1; k < t_grid_ns.size(); ++k) {
    if (!(t_grid_ns[k] >= t_grid_ns[k - 1])) {
      throw std::invalid_argument("population_trace grid must be monotone");
    }
  }
  cfg.validate();
  const int n = cfg.n_qubits;
  const std::vector<long> indices = single_excitation_indices(n);
  const EigenDecomposition eig =
      hermitian_eig(assemble_full_hamiltonian(cfg, dim_cap), dim_cap);

  PopulationTrace trace;
  trace.times_ns = t_grid_ns;
  trace.populations.resize(static_cast<long>(t_grid_ns.size()), n + 1);
  trace.leakage.reserve(t_grid_ns.size());
  for (std::size_t row = 0; row < t_grid_ns.size(); ++row) {
    const StateVector psi = evolve_with(eig, psi0, t_grid_ns[row]);
    double inside = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double p = std::norm(psi.amplitudes()(indices[k]));
      trace.populations(static_cast<long>(row), k) = p;
      inside += p;
    }
    trace.leakage.push_back(std::clamp(1.0 - inside, 0.0, 1.0));
  }
  return trace;
}

}  // namespace wbus

#endif  // WBUS_DYNAMICS_HPP_
