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

#ifndef WBUS_DEVICE_MODEL_HPP_
#define WBUS_DEVICE_MODEL_HPP_

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "wbus/numerics.hpp"

namespace wbus {

/// GHz -> rad/ns. The only place the 2 pi convention enters: configs store
/// plain frequencies, every Hamiltonian entry is angular.
inline double angular_from_ghz(double f_ghz) {
  return 2.0 * std::numbers::pi * f_ghz;
}

inline long pow3(int exponent) {
  long value = 1;
  for (int k = 0; k < exponent; ++k) {
    value *= 3;
  }
  return value;
}

/// Physical parameters of the N-qubit + resonator network, in GHz.
/// Qubit 1 is the energy reference, so the level shifts epsilon cover
/// qubits 2..N only. The momentum elements b and c are dimensionless.
struct DeviceConfig {
  int n_qubits = 0;
  double e10_ghz = 0.0;               // reference qubit splitting
  double er_ghz = 0.0;                // resonator splitting
  std::vector<double> epsilon_ghz;    // shifts of qubits 2..N
  double epsilon_r_ghz = 0.0;         // resonator shift
  std::vector<double> delta_ghz;      // anharmonicities of qubits 1..N
  std::vector<double> g_ghz;          // couplings g_1r..g_Nr
  std::vector<double> b;              // 0<->2 momentum element per qubit
  std::vector<double> c;              // 1<->2 momentum element per qubit

  void validate() const {
    if (n_qubits < 1) {
      throw std::invalid_argument("DeviceConfig requires n_qubits >= 1");
    }
    const auto require_size = [this](const std::vector<double>& v,
                                     std::size_t want, const char* name) {
      if (v.size() != want) {
        std::ostringstream msg;
        msg << "DeviceConfig." << name << " must have " << want
            << " entries for n_qubits = " << n_qubits << ", got " << v.size();
        throw std::invalid_argument(msg.str());
      }
      for (double x : v) {
        if (!std::isfinite(x)) {
          throw std::invalid_argument(std::string("DeviceConfig.") + name +
                                      " contains a non-finite value");
        }
      }
    };
    require_size(epsilon_ghz, static_cast<std::size_t>(n_qubits - 1),
                 "epsilon_ghz");
    require_size(delta_ghz, static_cast<std::size_t>(n_qubits), "delta_ghz");
    require_size(g_ghz, static_cast<std::size_t>(n_qubits), "g_ghz");
    require_size(b, static_cast<std::size_t>(n_qubits), "b");
    require_size(c, static_cast<std::size_t>(n_qubits), "c");
    for (double g : g_ghz) {
      if (g < 0.0) {
        throw std::invalid_argument("DeviceConfig couplings must be >= 0");
      }
    }
    if (!std::isfinite(e10_ghz) || !std::isfinite(er_ghz) ||
        !std::isfinite(epsilon_r_ghz)) {
      throw std::invalid_argument("DeviceConfig contains a non-finite value");
    }
  }
};

/// Ternary multi-index over the register. Digit order is qubit 1 first
/// (slowest) down to qubit N, then the resonator (fastest), so the ket
/// |q1 q2 ... qN r> reads off left to right.
struct BasisIndex {
  std::vector<int> digits;
  long linear_index = 0;

  static BasisIndex from_linear(long linear, int n_qubits) {
    if (n_qubits < 1) {
      throw std::invalid_argument("BasisIndex requires n_qubits >= 1");
    }
    const long dim = pow3(n_qubits + 1);
    if (linear < 0 || linear >= dim) {
      std::ostringstream msg;
      msg << "linear index " << linear << " outside [0, " << dim << ")";
      throw ShapeError(msg.str());
    }
    BasisIndex idx;
    idx.linear_index = linear;
    idx.digits.assign(n_qubits + 1, 0);
    long rest = linear;
    for (int slot = n_qubits; slot >= 0; --slot) {
      idx.digits[slot] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    return idx;
  }

  static BasisIndex from_digits(std::vector<int> digits) {
    if (digits.size() < 2) {
      throw std::invalid_argument(
          "BasisIndex requires at least one qubit plus the resonator");
    }
    BasisIndex idx;
    idx.linear_index = 0;
    for (int d : digits) {
      if (d < 0 || d > 2) {
        throw std::invalid_argument("BasisIndex digits must be 0, 1 or 2");
      }
      idx.linear_index = idx.linear_index * 3 + d;
    }
    idx.digits = std::move(digits);
    return idx;
  }
};

inline int excitation_number(const BasisIndex& idx) {
  int total = 0;
  for (int d : idx.digits) {
    total += d;
  }
  return total;
}

/// Number of qubits implied by a full product-basis dimension 3^(N+1).
inline int qubits_from_dim(long dim) {
  long value = 9;
  for (int n = 1; n < 20; ++n, value *= 3) {
    if (value == dim) {
      return n;
    }
  }
  std::ostringstream msg;
  msg << "dim " << dim << " is not 3^(N+1) for any supported N";
  throw ShapeError(msg.str());
}

/// The standard su(3) generators, lambda_1..lambda_8.
inline HermitianMatrix gell_mann(int k) {
  if (k < 1 || k > 8) {
    std::ostringstream msg;
    msg << "Gell-Mann index must be in 1..8, got " << k;
    throw std::invalid_argument(msg.str());
  }
  const Complex i(0.0, 1.0);
  Matrix m = Matrix::Zero(3, 3);
  switch (k) {
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -i;  m(1, 0) = i;   break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = 1.0; m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -i;  m(2, 0) = i;   break;
    case 6: m(1, 2) = 1.0; m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -i;  m(2, 1) = i;   break;
    case 8: {
      const double inv = 1.0 / std::sqrt(3.0);
      m(0, 0) = inv;
      m(1, 1) = inv;
      m(2, 2) = -2.0 * inv;
      break;
    }
  }
  return HermitianMatrix(std::move(m));
}

/// Generalized qubit momentum lambda_2 + b lambda_5 + c lambda_7, i.e.
/// i [[0,-1,-b],[1,0,-c],[b,c,0]].
inline HermitianMatrix qubit_momentum(double b, double c) {
  Matrix m = gell_mann(2).entries() + b * gell_mann(5).entries() +
             c * gell_mann(7).entries();
  return HermitianMatrix(std::move(m));
}

/// Resonator momentum: the harmonic special case b = 0, c = sqrt(2).
inline HermitianMatrix resonator_momentum() {
  return qubit_momentum(0.0, std::sqrt(2.0));
}

/// Diagonal 3x3 term of one qubit, rad/ns. Qubit 1 carries the reference
/// splitting; qubits 2..N add their shift epsilon_j.
inline HermitianMatrix subsystem_hamiltonian_qubit(const DeviceConfig& cfg,
                                                   int qubit_index) {
  if (qubit_index < 1 || qubit_index > cfg.n_qubits) {
    std::ostringstream msg;
    msg << "qubit index " << qubit_index << " outside 1.." << cfg.n_qubits;
    throw std::invalid_argument(msg.str());
  }
  const double e10 = cfg.e10_ghz;
  const double delta = cfg.delta_ghz[qubit_index - 1];
  const double eps =
      qubit_index == 1 ? 0.0 : cfg.epsilon_ghz[qubit_index - 2];
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = angular_from_ghz(-e10);
  m(1, 1) = angular_from_ghz(eps);
  m(2, 2) = angular_from_ghz(e10 + 2.0 * eps - delta);
  return HermitianMatrix(std::move(m));
}

/// Diagonal 3x3 term of the resonator, rad/ns.
inline HermitianMatrix subsystem_hamiltonian_resonator(
    const DeviceConfig& cfg) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = angular_from_ghz(-cfg.er_ghz);
  m(1, 1) = angular_from_ghz(cfg.epsilon_r_ghz);
  m(2, 2) = angular_from_ghz(cfg.er_ghz + 2.0 * cfg.epsilon_r_ghz);
  return HermitianMatrix(std::move(m));
}

/// Linear indices of the single-excitation states, ordered bus excitation
/// first, then qubit N down to qubit 1: powers of three 3^0 .. 3^N.
inline std::vector<long> single_excitation_indices(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument(
        "single_excitation_indices requires n_qubits >= 1");
  }
  std::vector<long> indices(n_qubits + 1);
  long weight = 1;
  for (int k = 0; k <= n_qubits; ++k) {
    indices[k] = weight;
    weight *= 3;
  }
  return indices;
}

/// Full network Hamiltonian on the 3^(N+1) product basis, rad/ns: the sum
/// of the diagonal subsystem terms plus g_ir p_i p_r for every qubit, each
/// factor identity-padded per the BasisIndex digit order.
inline HermitianMatrix assemble_full_hamiltonian(const DeviceConfig& cfg,
                                                 long dim_cap = kDefaultDimCap) {
  cfg.validate();
  const int n = cfg.n_qubits;
  const long dim = pow3(n + 1);
  if (dim > dim_cap) {
    std::ostringstream msg;
    msg << "full Hilbert space dim " << dim << " (N = " << n
        << ") exceeds cap " << dim_cap;
    throw ResourceLimitError(msg.str());
  }

  std::vector<std::array<double, 3>> qubit_diag(n);
  for (int i = 0; i < n; ++i) {
    const Matrix m = subsystem_hamiltonian_qubit(cfg, i + 1).entries();
    qubit_diag[i] = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real()};
  }
  const Matrix mr = subsystem_hamiltonian_resonator(cfg).entries();
  const std::array<double, 3> res_diag = {mr(0, 0).real(), mr(1, 1).real(),
                                          mr(2, 2).real()};

  Matrix h = Matrix::Zero(dim, dim);

  // Diagonal part. The accumulation order (qubit 1 .. qubit N, resonator)
  // is fixed so equal-energy states get bit-identical entries.
  for (long idx = 0; idx < dim; ++idx) {
    double acc = 0.0;
    long rest = idx;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>((rest / pow3(n - i)) % 3);
      acc += qubit_diag[i][digit];
    }
    acc += res_diag[static_cast<int>(rest % 3)];
    h(idx, idx) = acc;
  }

  // Coupling part: g_ir p_i p_r on the (qubit i, resonator) factor pair.
  const Matrix p_r = resonator_momentum().entries();
  for (int i = 0; i < n; ++i) {
    const double g_ang = angular_from_ghz(cfg.g_ghz[i]);
    if (g_ang == 0.0) {
      continue;
    }
    const Matrix p_i = qubit_momentum(cfg.b[i], cfg.c[i]).entries();
    const long qubit_stride = pow3(n - i);
    for (long col = 0; col < dim; ++col) {
      const int qd = static_cast<int>((col / qubit_stride) % 3);
      const int rd = static_cast<int>(col % 3);
      for (int qd2 = 0; qd2 < 3; ++qd2) {
        const Complex pq = p_i(qd2, qd);
        if (pq == Complex(0.0, 0.0)) {
          continue;
        }
        for (int rd2 = 0; rd2 < 3; ++rd2) {
          const Complex pr = p_r(rd2, rd);
          if (pr == Complex(0.0, 0.0)) {
            continue;
          }
          const long row = col + (qd2 - qd) * qubit_stride + (rd2 - rd);
          h(row, col) += g_ang * pq * pr;
        }
      }
    }
  }

  return HermitianMatrix(std::move(h));
}

/// Restriction of a full Hamiltonian to the single-excitation block, in the
/// (bus, qubit N, ..., qubit 1) order. The diagonal is reported relative to
/// the qubit-1-excited entry, which removes the offset every
/// single-excitation state shares and leaves (eps_r + E_r - E_10,
/// eps_N, ..., eps_2, 0) in angular units.
inline HermitianMatrix project_single_excitation(const HermitianMatrix& h_full,
                                                 int n_qubits) {
  if (h_full.dim() != pow3(n_qubits + 1)) {
    std::ostringstream msg;
    msg << "Hamiltonian dim " << h_full.dim() << " does not match 3^(N+1) = "
        << pow3(n_qubits + 1) << " for N = " << n_qubits;
    throw ShapeError(msg.str());
  }
  const std::vector<long> indices = single_excitation_indices(n_qubits);
  const long block_dim = n_qubits + 1;
  Matrix block(block_dim, block_dim);
  for (long a = 0; a < block_dim; ++a) {
    for (long b = 0; b < block_dim; ++b) {
      block(a, b) = h_full.entries()(indices[a], indices[b]);
    }
  }
  const Complex reference = block(block_dim - 1, block_dim - 1);
  for (long a = 0; a < block_dim; ++a) {
    block(a, a) -= reference;
  }
  return HermitianMatrix(std::move(block));
}

}  // namespace wbus

#endif  // WBUS_DEVICE_MODEL_HPP_
