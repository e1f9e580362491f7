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

#ifndef WBUS_NUMERICS_HPP_
#define WBUS_NUMERICS_HPP_

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "wbus/errors.hpp"

namespace wbus {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest matrix dimension the dense kernels accept by default.
inline constexpr long kDefaultDimCap = 20000;

/// Dense complex Hermitian operator. Construction verifies conjugate
/// symmetry entrywise (1e-12 absolute) so every downstream consumer can
/// rely on it.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix entries, double symmetry_tol = 1e-12)
      : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
      std::ostringstream msg;
      msg << "HermitianMatrix requires a square matrix of dim >= 1, got "
          << entries_.rows() << "x" << entries_.cols();
      throw ShapeError(msg.str());
    }
    double worst = 0.0;
    long worst_i = 0;
    long worst_j = 0;
    for (long j = 0; j < entries_.cols(); ++j) {
      for (long i = 0; i <= j; ++i) {
        const double dev = std::abs(entries_(i, j) - std::conj(entries_(j, i)));
        if (dev > worst) {
          worst = dev;
          worst_i = i;
          worst_j = j;
        }
      }
    }
    if (!(worst <= symmetry_tol)) {
      std::ostringstream msg;
      msg << "symmetry violation: |H(" << worst_i << "," << worst_j
          << ") - conj(H(" << worst_j << "," << worst_i << "))| = " << worst
          << " exceeds " << symmetry_tol;
      throw std::invalid_argument(msg.str());
    }
  }

  long dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Which basis a state's amplitudes are expressed in.
enum class Basis {
  FullProduct,                // 3^(N+1) ternary product states
  EffectiveSingleExcitation,  // N+1 states: hub first, then the spokes
};

/// Normalized complex amplitude vector with a basis tag.
class StateVector {
 public:
  StateVector(Vector amplitudes, Basis basis, double norm_tol = 1e-6)
      : amplitudes_(std::move(amplitudes)), basis_(basis) {
    if (amplitudes_.size() < 1) {
      throw ShapeError("StateVector requires dim >= 1");
    }
    const double n = amplitudes_.norm();
    if (!(std::abs(n - 1.0) <= norm_tol)) {
      std::ostringstream msg;
      msg << "StateVector norm " << n << " deviates from 1 by more than "
          << norm_tol;
      throw std::invalid_argument(msg.str());
    }
  }

  static StateVector basis_state(long dim, long index, Basis basis) {
    if (index < 0 || index >= dim) {
      std::ostringstream msg;
      msg << "basis index " << index << " outside [0, " << dim << ")";
      throw ShapeError(msg.str());
    }
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return StateVector(std::move(v), basis);
  }

  long dim() const { return amplitudes_.size(); }
  Basis basis() const { return basis_; }
  const Vector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  Vector amplitudes_;
  Basis basis_;
};

/// Eigenvalues ascending; eigenvector columns orthonormal, with the first
/// component of each column above 1e-12 in magnitude made real positive so
/// repeated runs produce identical output. Within a degenerate eigenspace
/// the basis choice is otherwise unspecified.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

inline EigenDecomposition hermitian_eig(const HermitianMatrix& m,
                                        long dim_cap = kDefaultDimCap) {
  if (m.dim() > dim_cap) {
    std::ostringstream msg;
    msg << "matrix dim " << m.dim() << " exceeds cap " << dim_cap;
    throw ResourceLimitError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (long k = 0; k < out.eigenvectors.cols(); ++k) {
    for (long i = 0; i < out.eigenvectors.rows(); ++i) {
      const Complex lead = out.eigenvectors(i, k);
      if (std::abs(lead) > 1e-12) {
        out.eigenvectors.col(k) *= std::conj(lead) / std::abs(lead);
        break;
      }
    }
  }
  return out;
}

/// Applies exp(-i M t) through a precomputed decomposition of M. Negative t
/// runs the evolution backwards.
inline StateVector evolve_with(const EigenDecomposition& eig,
                               const StateVector& psi, double t_ns) {
  if (eig.eigenvectors.rows() != psi.dim()) {
    std::ostringstream msg;
    msg << "propagator dim " << eig.eigenvectors.rows()
        << " does not match state dim " << psi.dim();
    throw ShapeError(msg.str());
  }
  if (!std::isfinite(t_ns)) {
    throw std::invalid_argument("evolution time must be finite");
  }
  Vector modal = eig.eigenvectors.adjoint() * psi.amplitudes();
  for (long k = 0; k < modal.size(); ++k) {
    modal(k) *= std::polar(1.0, -eig.eigenvalues(k) * t_ns);
  }
  return StateVector(eig.eigenvectors * modal, psi.basis());
}

inline StateVector evolve_eig(const HermitianMatrix& m, const StateVector& psi,
                              double t_ns, long dim_cap = kDefaultDimCap) {
  if (m.dim() != psi.dim()) {
    std::ostringstream msg;
    msg << "operator dim " << m.dim() << " does not match state dim "
        << psi.dim();
    throw ShapeError(msg.str());
  }
  return evolve_with(hermitian_eig(m, dim_cap), psi, t_ns);
}

/// Series-route propagator used to cross-check evolve_eig: exp(-i M t) is
/// formed as a truncated Taylor series of the 2^-s scaled argument and
/// squared back up, then applied to psi. Shares no code with the
/// eigensolver path.
inline StateVector matexp_apply_oracle(const HermitianMatrix& m,
                                       const StateVector& psi, double t_ns,
                                       int max_squarings = 60) {
  if (m.dim() != psi.dim()) {
    std::ostringstream msg;
    msg << "operator dim " << m.dim() << " does not match state dim "
        << psi.dim();
    throw ShapeError(msg.str());
  }
  if (!std::isfinite(t_ns)) {
    throw std::invalid_argument("evolution time must be finite");
  }
  Matrix arg = Complex(0.0, -1.0) * t_ns * m.entries();
  const double norm_inf = arg.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm_inf > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm_inf / 0.5)));
  }
  if (squarings > max_squarings) {
    std::ostringstream msg;
    msg << "series would need " << squarings
        << " squarings (limit " << max_squarings << "); |arg| = " << norm_inf;
    throw ConvergenceError(msg.str());
  }
  arg /= std::pow(2.0, squarings);

  const long n = m.dim();
  Matrix exponential = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * arg) / static_cast<double>(k);
    exponential += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) {
    exponential = exponential * exponential;
  }
  return StateVector(exponential * psi.amplitudes(), psi.basis());
}

/// Kronecker product; dim(result) = dim(a) * dim(b).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

}  // namespace wbus

#endif  // WBUS_NUMERICS_HPP_
