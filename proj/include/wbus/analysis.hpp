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

#ifndef WBUS_ANALYSIS_HPP_
#define WBUS_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>

#include "wbus/device_model.hpp"
#include "wbus/effective_model.hpp"

namespace wbus {

/// Ideal W state in the full product basis: uniform amplitude over the
/// qubit excitations (WN) or over qubits plus bus (WN1), zero elsewhere.
struct TargetState {
  StateVector vector;
  Variant variant;
  int n_qubits;
};

inline TargetState w_target(int n_qubits, Variant variant) {
  if (n_qubits < 1) {
    throw std::invalid_argument("w_target requires n_qubits >= 1");
  }
  const long dim = pow3(n_qubits + 1);
  const std::vector<long> indices = single_excitation_indices(n_qubits);
  Vector v = Vector::Zero(dim);
  if (variant == Variant::WN) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (std::size_t k = 1; k < indices.size(); ++k) {
      v(indices[k]) = amp;
    }
  } else {
    const double amp = 1.0 / std::sqrt(n_qubits + 1.0);
    for (long idx : indices) {
      v(idx) = amp;
    }
  }
  return TargetState{StateVector(std::move(v), Basis::FullProduct), variant,
                     n_qubits};
}

/// Squared overlap |<target|psi>|^2. Invariant under any global phase of
/// psi.
inline double fidelity(const StateVector& psi, const TargetState& target) {
  if (psi.dim() != target.vector.dim()) {
    std::ostringstream msg;
    msg << "state dim " << psi.dim() << " does not match target dim "
        << target.vector.dim();
    throw ShapeError(msg.str());
  }
  const Complex overlap = target.vector.amplitudes().dot(psi.amplitudes());
  return std::norm(overlap);
}

/// Population outside the single-excitation block: 1 minus the restricted
/// norm squared, clamped to [0, 1].
inline double leakage(const StateVector& psi, int n_qubits) {
  if (psi.dim() != pow3(n_qubits + 1)) {
    std::ostringstream msg;
    msg << "state dim " << psi.dim() << " does not match 3^(N+1) for N = "
        << n_qubits;
    throw ShapeError(msg.str());
  }
  double inside = 0.0;
  for (long idx : single_excitation_indices(n_qubits)) {
    inside += std::norm(psi.amplitudes()(idx));
  }
  return std::clamp(1.0 - inside, 0.0, 1.0);
}

}  // namespace wbus

#endif  // WBUS_ANALYSIS_HPP_
