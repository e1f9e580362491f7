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

#ifndef WBUS_EFFECTIVE_MODEL_HPP_
#define WBUS_EFFECTIVE_MODEL_HPP_

#include <cmath>
#include <numbers>
#include <string>

#include "wbus/numerics.hpp"

namespace wbus {

/// Which uniform superposition the protocol aims for: WN spreads one
/// excitation over the N qubits, WN1 over the N qubits plus the bus.
enum class Variant { WN, WN1 };

inline const char* variant_name(Variant v) {
  return v == Variant::WN ? "WN" : "WN1";
}

/// The (N+1)-dimensional star model: a hub (the bus excitation) coupled with
/// equal strength g to N spokes (the qubit excitations). Variant WN keeps
/// the hub on resonance with the spokes; WN1 biases the hub diagonal to 2g.
/// All energies are angular frequencies in rad/ns.
struct EffectiveModel {
  int n_qubits;
  double g_angular;
  Variant variant;

  EffectiveModel(int n_qubits_, double g_angular_, Variant variant_)
      : n_qubits(n_qubits_), g_angular(g_angular_), variant(variant_) {
    if (n_qubits < 1) {
      throw std::invalid_argument("EffectiveModel requires n_qubits >= 1");
    }
    if (!(g_angular > 0.0) || !std::isfinite(g_angular)) {
      throw std::invalid_argument("EffectiveModel requires g_angular > 0");
    }
  }

  double hub_diagonal() const {
    return variant == Variant::WN1 ? 2.0 * g_angular : 0.0;
  }
};

inline HermitianMatrix build_star_hamiltonian(const EffectiveModel& model) {
  const long n = model.n_qubits;
  Matrix h = Matrix::Zero(n + 1, n + 1);
  h(0, 0) = model.hub_diagonal();
  for (long k = 1; k <= n; ++k) {
    h(0, k) = model.g_angular;
    h(k, 0) = model.g_angular;
  }
  return HermitianMatrix(std::move(h));
}

/// Closed-form spectrum, ascending: one pulled-down level, N-1 zero modes,
/// one pushed-up level.
struct AnalyticSpectrum {
  Eigen::VectorXd eigenvalues;  // rad/ns
  int degeneracy_count;
};

inline AnalyticSpectrum analytic_spectrum(const EffectiveModel& model) {
  const int n = model.n_qubits;
  const double g = model.g_angular;
  double low = 0.0;
  double high = 0.0;
  if (model.variant == Variant::WN) {
    low = -std::sqrt(static_cast<double>(n)) * g;
    high = std::sqrt(static_cast<double>(n)) * g;
  } else {
    low = (1.0 - std::sqrt(n + 1.0)) * g;
    high = (1.0 + std::sqrt(n + 1.0)) * g;
  }
  Eigen::VectorXd vals = Eigen::VectorXd::Zero(n + 1);
  vals(0) = low;
  vals(n) = high;
  return AnalyticSpectrum{std::move(vals), n - 1};
}

/// Closed-form eigenvector matrix with deliberately unnormalized columns.
/// Column 0 pairs with the lowest eigenvalue, column 1 with the highest,
/// columns 2..N span the zero modes and are not mutually orthogonal. The
/// contract is the eigen-property H s_k = E_k s_k only.
inline Eigen::MatrixXd analytic_eigvec_matrix(const EffectiveModel& model) {
  const int n = model.n_qubits;
  double hub_low = 0.0;
  double hub_high = 0.0;
  if (model.variant == Variant::WN) {
    hub_low = -std::sqrt(static_cast<double>(n));
    hub_high = std::sqrt(static_cast<double>(n));
  } else {
    hub_low = 1.0 - std::sqrt(n + 1.0);
    hub_high = 1.0 + std::sqrt(n + 1.0);
  }
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n + 1, n + 1);
  s(0, 0) = hub_low;
  s(0, 1) = hub_high;
  for (int row = 1; row <= n; ++row) {
    s(row, 0) = 1.0;
    s(row, 1) = 1.0;
  }
  for (int col = 2; col <= n; ++col) {
    s(1, col) = -1.0;
    s(col, col) = 1.0;
  }
  return s;
}

/// Eigenvalues paired with the columns of analytic_eigvec_matrix:
/// (lowest, highest, 0 x (N-1)).
inline Eigen::VectorXd analytic_eigvec_eigenvalues(const EffectiveModel& model) {
  const AnalyticSpectrum spectrum = analytic_spectrum(model);
  Eigen::VectorXd vals = Eigen::VectorXd::Zero(model.n_qubits + 1);
  vals(0) = spectrum.eigenvalues(0);
  vals(1) = spectrum.eigenvalues(model.n_qubits);
  return vals;
}

/// Duration of the entangling pulse, in ns: pi / (2 g sqrt(N)) for WN and
/// pi / (2 g sqrt(N+1)) for WN1. Shrinks as the register grows.
inline double entangling_time(const EffectiveModel& model) {
  const double root = model.variant == Variant::WN
                          ? std::sqrt(static_cast<double>(model.n_qubits))
                          : std::sqrt(model.n_qubits + 1.0);
  return std::numbers::pi / (2.0 * model.g_angular * root);
}

/// Unit scalar that rotates the state evolved for entangling_time from the
/// hub onto the real positive uniform vector: i for WN, i e^{i alpha} with
/// alpha = pi / (2 sqrt(N+1)) for WN1. Depends only on the variant and N.
inline Complex alignment_phase(int n_qubits, Variant variant) {
  if (variant == Variant::WN) {
    return Complex(0.0, 1.0);
  }
  const double alpha = std::numbers::pi / (2.0 * std::sqrt(n_qubits + 1.0));
  return Complex(0.0, 1.0) * std::polar(1.0, alpha);
}

inline Complex global_phase(const EffectiveModel& model) {
  return alignment_phase(model.n_qubits, model.variant);
}

/// Uniform superposition in the effective basis: spokes only (hub amplitude
/// zero) or all N+1 components.
inline StateVector uniform_target(int n_qubits, bool include_hub) {
  if (n_qubits < 1) {
    throw std::invalid_argument("uniform_target requires n_qubits >= 1");
  }
  Vector v = Vector::Zero(n_qubits + 1);
  if (include_hub) {
    v.setConstant(1.0 / std::sqrt(n_qubits + 1.0));
  } else {
    v.tail(n_qubits).setConstant(1.0 / std::sqrt(static_cast<double>(n_qubits)));
  }
  return StateVector(std::move(v), Basis::EffectiveSingleExcitation);
}

/// Hub-launched evolution of the WN star in closed form: the hub amplitude
/// is cos(sqrt(N) g t) and each spoke -i sin(sqrt(N) g t) / sqrt(N). The
/// WN1 star has no closed form here; evolve it numerically.
inline StateVector evolve_star_closed_form(const EffectiveModel& model,
                                           double t_ns) {
  if (model.variant != Variant::WN) {
    throw std::invalid_argument(
        "closed-form star evolution supports variant WN only");
  }
  if (!std::isfinite(t_ns)) {
    throw std::invalid_argument("evolution time must be finite");
  }
  const int n = model.n_qubits;
  const double root_n = std::sqrt(static_cast<double>(n));
  const double angle = root_n * model.g_angular * t_ns;
  Vector v(n + 1);
  v(0) = std::cos(angle);
  const Complex spoke = Complex(0.0, -1.0) * std::sin(angle) / root_n;
  v.tail(n).setConstant(spoke);
  return StateVector(std::move(v), Basis::EffectiveSingleExcitation);
}

}  // namespace wbus

#endif  // WBUS_EFFECTIVE_MODEL_HPP_
