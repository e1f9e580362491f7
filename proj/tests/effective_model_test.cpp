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

#include "wbus/effective_model.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using wbus::Basis;
using wbus::Complex;
using wbus::EffectiveModel;
using wbus::Matrix;
using wbus::StateVector;
using wbus::Variant;
using wbus_test::max_amplitude_diff;

namespace {

constexpr double kGAngular100MHz = 0.6283185307179586;  // 2 pi * 0.1 GHz

TEST(EffectiveModelTest, ValidatesArguments) {
  EXPECT_THROW(EffectiveModel(0, 1.0, Variant::WN), std::invalid_argument);
  EXPECT_THROW(EffectiveModel(2, 0.0, Variant::WN), std::invalid_argument);
  EXPECT_THROW(EffectiveModel(2, -1.0, Variant::WN1), std::invalid_argument);
}

TEST(StarHamiltonianTest, SingleQubitIsTwoLevelCoupling) {
  const Matrix h =
      wbus::build_star_hamiltonian(EffectiveModel(1, 1.0, Variant::WN))
          .entries();
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = 1.0;
  expected(1, 0) = 1.0;
  EXPECT_LE((h - expected).cwiseAbs().maxCoeff(), 0.0);
}

TEST(StarHamiltonianTest, FourSpokeMatrixVerbatim) {
  const Matrix h =
      wbus::build_star_hamiltonian(EffectiveModel(4, 1.0, Variant::WN))
          .entries();
  ASSERT_EQ(h.rows(), 5);
  for (long row = 0; row < 5; ++row) {
    for (long col = 0; col < 5; ++col) {
      const double expected =
          (row == 0 && col > 0) || (col == 0 && row > 0) ? 1.0 : 0.0;
      EXPECT_EQ(h(row, col), Complex(expected, 0.0)) << row << "," << col;
    }
  }
}

TEST(StarHamiltonianTest, BiasedHubVariant) {
  const Matrix h =
      wbus::build_star_hamiltonian(EffectiveModel(4, 1.0, Variant::WN1))
          .entries();
  EXPECT_EQ(h(0, 0), Complex(2.0, 0.0));
  for (long k = 1; k <= 4; ++k) {
    EXPECT_EQ(h(0, k), Complex(1.0, 0.0));
    EXPECT_EQ(h(k, k), Complex(0.0, 0.0));
  }
}

TEST(AnalyticSpectrumTest, FourSpokeValues) {
  const auto wn = wbus::analytic_spectrum(EffectiveModel(4, 1.0, Variant::WN));
  ASSERT_EQ(wn.eigenvalues.size(), 5);
  EXPECT_DOUBLE_EQ(wn.eigenvalues(0), -2.0);
  EXPECT_DOUBLE_EQ(wn.eigenvalues(4), 2.0);
  EXPECT_EQ(wn.degeneracy_count, 3);

  const auto wn1 =
      wbus::analytic_spectrum(EffectiveModel(4, 1.0, Variant::WN1));
  EXPECT_DOUBLE_EQ(wn1.eigenvalues(0), 1.0 - std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(wn1.eigenvalues(4), 1.0 + std::sqrt(5.0));
  for (long k = 1; k <= 3; ++k) {
    EXPECT_DOUBLE_EQ(wn.eigenvalues(k), 0.0);
    EXPECT_DOUBLE_EQ(wn1.eigenvalues(k), 0.0);
  }
}

TEST(AnalyticSpectrumTest, SingleQubitValues) {
  const double g = 0.37;
  const auto spectrum = wbus::analytic_spectrum(EffectiveModel(1, g, Variant::WN));
  EXPECT_DOUBLE_EQ(spectrum.eigenvalues(0), -g);
  EXPECT_DOUBLE_EQ(spectrum.eigenvalues(1), g);
  EXPECT_EQ(spectrum.degeneracy_count, 0);
}

TEST(AnalyticSpectrumTest, MatchesEigensolverForBothVariants) {
  for (int n = 1; n <= 16; ++n) {
    for (Variant variant : {Variant::WN, Variant::WN1}) {
      const EffectiveModel model(n, kGAngular100MHz, variant);
      const auto analytic = wbus::analytic_spectrum(model);
      const auto numeric =
          wbus::hermitian_eig(wbus::build_star_hamiltonian(model));
      for (long k = 0; k <= n; ++k) {
        EXPECT_LE(std::abs(analytic.eigenvalues(k) - numeric.eigenvalues(k)),
                  1e-12)
            << "N=" << n << " variant=" << wbus::variant_name(variant);
      }
    }
  }
}

TEST(AnalyticEigvecTest, FourSpokeColumns) {
  const Eigen::MatrixXd s =
      wbus::analytic_eigvec_matrix(EffectiveModel(4, 1.0, Variant::WN));
  Eigen::VectorXd first(5);
  first << -2.0, 1.0, 1.0, 1.0, 1.0;
  EXPECT_LE((s.col(0) - first).cwiseAbs().maxCoeff(), 0.0);

  const Eigen::MatrixXd s1 =
      wbus::analytic_eigvec_matrix(EffectiveModel(4, 1.0, Variant::WN1));
  EXPECT_DOUBLE_EQ(s1(0, 0), 1.0 - std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(s1(0, 1), 1.0 + std::sqrt(5.0));
}

TEST(AnalyticEigvecTest, SingleQubitColumns) {
  const Eigen::MatrixXd s =
      wbus::analytic_eigvec_matrix(EffectiveModel(1, 1.0, Variant::WN));
  EXPECT_DOUBLE_EQ(s(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(s(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(s(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(s(1, 1), 1.0);
}

TEST(AnalyticEigvecTest, EigenPropertyHoldsColumnwise) {
  for (int n = 1; n <= 16; ++n) {
    for (Variant variant : {Variant::WN, Variant::WN1}) {
      const EffectiveModel model(n, kGAngular100MHz, variant);
      const Matrix h = wbus::build_star_hamiltonian(model).entries();
      const Eigen::MatrixXd s = wbus::analytic_eigvec_matrix(model);
      const Eigen::VectorXd vals = wbus::analytic_eigvec_eigenvalues(model);
      for (long k = 0; k <= n; ++k) {
        const Matrix residual =
            h * s.col(k).cast<Complex>() - vals(k) * s.col(k).cast<Complex>();
        EXPECT_LE(residual.cwiseAbs().maxCoeff(), 1e-12)
            << "N=" << n << " col=" << k;
      }
    }
  }
}

TEST(EntanglingTimeTest, ReferenceCouplingGivesPublishedDurations) {
  EXPECT_NEAR(
      wbus::entangling_time(EffectiveModel(4, kGAngular100MHz, Variant::WN)),
      1.25, 1e-12);
  EXPECT_NEAR(
      wbus::entangling_time(EffectiveModel(4, kGAngular100MHz, Variant::WN1)),
      1.118033988749895, 1e-12);
  const double g = 0.91;
  EXPECT_NEAR(wbus::entangling_time(EffectiveModel(1, g, Variant::WN)),
              std::numbers::pi / (2.0 * g), 1e-15);
}

TEST(EntanglingTimeTest, ScalesAsInverseSqrtN) {
  const double g = kGAngular100MHz;
  const double reference = std::numbers::pi / (2.0 * g);
  for (int n = 1; n <= 16; ++n) {
    const double wn =
        wbus::entangling_time(EffectiveModel(n, g, Variant::WN)) *
        std::sqrt(static_cast<double>(n));
    EXPECT_LE(std::abs(wn - reference), 4e-16 * reference);
    const double wn1 =
        wbus::entangling_time(EffectiveModel(n, g, Variant::WN1)) *
        std::sqrt(n + 1.0);
    EXPECT_LE(std::abs(wn1 - reference), 4e-16 * reference);
  }
}

TEST(GlobalPhaseTest, VariantValues) {
  EXPECT_EQ(wbus::global_phase(EffectiveModel(7, 1.0, Variant::WN)),
            Complex(0.0, 1.0));

  const Complex expected =
      Complex(0.0, 1.0) *
      std::polar(1.0, std::numbers::pi / (2.0 * std::sqrt(5.0)));
  EXPECT_LE(std::abs(wbus::global_phase(EffectiveModel(4, 1.0, Variant::WN1)) -
                     expected),
            1e-15);

  // the alignment phase decays to i as the register grows
  EXPECT_LE(std::abs(wbus::global_phase(
                         EffectiveModel(999999, 1.0, Variant::WN1)) -
                     Complex(0.0, 1.0)),
            2e-3);
}

TEST(ClosedFormEvolutionTest, ZeroTimeKeepsHub) {
  const StateVector out =
      wbus::evolve_star_closed_form(EffectiveModel(3, 1.3, Variant::WN), 0.0);
  EXPECT_EQ(out.basis(), Basis::EffectiveSingleExcitation);
  EXPECT_EQ(out.amplitudes()(0), Complex(1.0, 0.0));
}

TEST(ClosedFormEvolutionTest, EntanglingTimeGivesUniformSpokes) {
  for (int n : {1, 2, 4, 8}) {
    const EffectiveModel model(n, kGAngular100MHz, Variant::WN);
    const StateVector out =
        wbus::evolve_star_closed_form(model, wbus::entangling_time(model));
    EXPECT_LE(std::abs(out.amplitudes()(0)), 1e-12);
    const Complex spoke(0.0, -1.0 / std::sqrt(static_cast<double>(n)));
    for (long k = 1; k <= n; ++k) {
      EXPECT_LE(std::abs(out.amplitudes()(k) - spoke), 1e-12);
    }
  }
}

TEST(ClosedFormEvolutionTest, MatchesSeriesOracleAtRandomTimes) {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> time(0.0, 6.0);
  const EffectiveModel model(3, kGAngular100MHz, Variant::WN);
  const auto star = wbus::build_star_hamiltonian(model);
  const StateVector hub =
      StateVector::basis_state(4, 0, Basis::EffectiveSingleExcitation);
  for (int rep = 0; rep < 8; ++rep) {
    const double t = time(rng);
    const StateVector closed = wbus::evolve_star_closed_form(model, t);
    const StateVector series = wbus::matexp_apply_oracle(star, hub, t);
    EXPECT_LE(max_amplitude_diff(closed.amplitudes(), series.amplitudes()),
              1e-10)
        << "t=" << t;
  }
}

TEST(ClosedFormEvolutionTest, RejectsBiasedHubVariant) {
  EXPECT_THROW(
      wbus::evolve_star_closed_form(EffectiveModel(3, 1.0, Variant::WN1), 0.5),
      std::invalid_argument);
}

TEST(UniformTargetTest, SpokeAndFullVariants) {
  const StateVector spokes = wbus::uniform_target(4, false);
  EXPECT_EQ(spokes.amplitudes()(0), Complex(0.0, 0.0));
  for (long k = 1; k <= 4; ++k) {
    EXPECT_EQ(spokes.amplitudes()(k), Complex(0.5, 0.0));
  }

  const StateVector full = wbus::uniform_target(4, true);
  for (long k = 0; k <= 4; ++k) {
    EXPECT_NEAR(full.amplitudes()(k).real(), 0.4472135954999579, 1e-15);
  }

  const StateVector single = wbus::uniform_target(1, false);
  EXPECT_EQ(single.amplitudes()(0), Complex(0.0, 0.0));
  EXPECT_EQ(single.amplitudes()(1), Complex(1.0, 0.0));
}

// Applying the alignment phase to the hub state evolved for the entangling
// time must land exactly on the uniform target, for both variants.
TEST(WGenerationIdentityTest, BothVariantsReachTheirTargets) {
  for (int n = 1; n <= 8; ++n) {
    {
      const EffectiveModel model(n, kGAngular100MHz, Variant::WN);
      const StateVector evolved =
          wbus::evolve_star_closed_form(model, wbus::entangling_time(model));
      const wbus::Vector aligned =
          wbus::global_phase(model) * evolved.amplitudes();
      EXPECT_LE(max_amplitude_diff(
                    aligned, wbus::uniform_target(n, false).amplitudes()),
                1e-10)
          << "WN N=" << n;
    }
    {
      const EffectiveModel model(n, kGAngular100MHz, Variant::WN1);
      const StateVector hub = StateVector::basis_state(
          n + 1, 0, Basis::EffectiveSingleExcitation);
      const StateVector evolved =
          wbus::evolve_eig(wbus::build_star_hamiltonian(model), hub,
                           wbus::entangling_time(model));
      const wbus::Vector aligned =
          wbus::global_phase(model) * evolved.amplitudes();
      EXPECT_LE(max_amplitude_diff(
                    aligned, wbus::uniform_target(n, true).amplitudes()),
                1e-10)
          << "WN1 N=" << n;
    }
  }
}

}  // namespace
