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

#ifndef WBUS_TESTS_TEST_SUPPORT_HPP_
#define WBUS_TESTS_TEST_SUPPORT_HPP_

#include <random>

#include "wbus/wbus.hpp"

namespace wbus_test {

inline wbus::Matrix random_hermitian(long dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  wbus::Matrix a(dim, dim);
  for (long j = 0; j < dim; ++j) {
    for (long i = 0; i < dim; ++i) {
      a(i, j) = wbus::Complex(gauss(rng), gauss(rng));
    }
  }
  return wbus::Matrix((a + a.adjoint()) / 2.0);
}

inline wbus::StateVector random_state(long dim, std::mt19937& rng,
                                      wbus::Basis basis) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  wbus::Vector v(dim);
  for (long i = 0; i < dim; ++i) {
    v(i) = wbus::Complex(gauss(rng), gauss(rng));
  }
  v /= v.norm();
  return wbus::StateVector(std::move(v), basis);
}

/// The published reference device: everything on resonance, 10 GHz
/// splittings, 250 MHz anharmonicity, 100 MHz couplings.
inline wbus::DeviceConfig reference_device(int n_qubits) {
  wbus::DeviceConfig cfg;
  cfg.n_qubits = n_qubits;
  cfg.e10_ghz = 10.0;
  cfg.er_ghz = 10.0;
  cfg.epsilon_ghz.assign(n_qubits - 1, 0.0);
  cfg.epsilon_r_ghz = 0.0;
  cfg.delta_ghz.assign(n_qubits, 0.25);
  cfg.g_ghz.assign(n_qubits, 0.1);
  cfg.b.assign(n_qubits, 0.08);
  cfg.c.assign(n_qubits, 1.43);
  return cfg;
}

/// Independent network assembly through explicit Kronecker chains; used to
/// cross-check the production assembly for small registers.
inline wbus::Matrix kron_chain_hamiltonian(const wbus::DeviceConfig& cfg) {
  using wbus::kron;
  const int n = cfg.n_qubits;
  const auto identity = [](long d) {
    return wbus::Matrix(wbus::Matrix::Identity(d, d));
  };
  const long dim = wbus::pow3(n + 1);
  wbus::Matrix h = wbus::Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    const wbus::Matrix hq =
        wbus::subsystem_hamiltonian_qubit(cfg, i + 1).entries();
    h += kron(kron(identity(wbus::pow3(i)), hq),
              identity(wbus::pow3(n - i)));
  }
  h += kron(identity(wbus::pow3(n)),
            wbus::subsystem_hamiltonian_resonator(cfg).entries());
  const wbus::Matrix p_r = wbus::resonator_momentum().entries();
  for (int i = 0; i < n; ++i) {
    const wbus::Matrix p_i = wbus::qubit_momentum(cfg.b[i], cfg.c[i]).entries();
    h += wbus::angular_from_ghz(cfg.g_ghz[i]) *
         kron(kron(kron(identity(wbus::pow3(i)), p_i),
                   identity(wbus::pow3(n - 1 - i))),
              p_r);
  }
  return h;
}

inline double max_amplitude_diff(const wbus::Vector& a, const wbus::Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace wbus_test

#endif  // WBUS_TESTS_TEST_SUPPORT_HPP_
