// Copyright 2026 The wtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wtomo/mitigation.hpp"
#include "wtomo/noisesim.hpp"
#include "wtomo/qstate.hpp"

namespace wtomo {
namespace {

TEST(Mitigation, InvertsTheTrueConfusionExactly) {
  std::mt19937_64 rng(31);
  const ReadoutModel model = ReadoutModel::device();
  const std::vector<CalibrationMatrix> fs = model.matrices();
  const DensityMatrix rho(testing::random_density_matrix(8, rng));
  for (const auto& s : three_qubit_settings()) {
    const ProbTable ideal = exact_probs(rho, s);
    const ProbTable back = mitigate_probs(apply_readout_noise(ideal, model), fs);
    for (std::size_t m = 0; m < 8; ++m) EXPECT_NEAR(back.probs[m], ideal.probs[m], 1e-14) << s.label;
  }
}

TEST(Mitigation, MatchesExplicitInverseOfKroneckerProduct) {
  // 4x4 inverse of F_A (x) F_B written out through the 2x2 adjugates.
  const CalibrationMatrix fa = CalibrationMatrix::from_errors(0.023, 0.008);
  const CalibrationMatrix fb = CalibrationMatrix::from_errors(0.004, 0.009);
  auto inv2 = [](const CalibrationMatrix& f) {
    const double d = f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0);
    return std::array<std::array<double, 2>, 2>{{{f(1, 1) / d, -f(0, 1) / d}, {-f(1, 0) / d, f(0, 0) / d}}};
  };
  const auto ia = inv2(fa);
  const auto ib = inv2(fb);
  const ProbTable p{"ZZ", 2, {0.4, 0.3, 0.2, 0.1}};
  const std::vector<CalibrationMatrix> fs{fa, fb};
  const ProbTable q = mitigate_probs(p, fs);
  for (std::size_t r = 0; r < 4; ++r) {
    double ref = 0.0;
    for (std::size_t c = 0; c < 4; ++c) ref += ia[r >> 1][c >> 1] * ib[r & 1][c & 1] * p.probs[c];
    EXPECT_NEAR(q.probs[r], ref, 1e-15);
  }
}

TEST(Mitigation, NegativeEntriesAreNotClipped) {
  const std::vector<CalibrationMatrix> fs{CalibrationMatrix::from_errors(0.05, 0.05)};
  const ProbTable q = mitigate_probs({"Z", 1, {1.0, 0.0}}, fs);
  EXPECT_LT(q.probs[1], 0.0);
  EXPECT_NEAR(q.probs[0] + q.probs[1], 1.0, 1e-15);
}

TEST(Mitigation, RejectsMismatchedOrSingularCalibration) {
  const std::vector<CalibrationMatrix> one{CalibrationMatrix::identity()};
  EXPECT_THROW(mitigate_probs({"ZZ", 2, {1, 0, 0, 0}}, one), std::invalid_argument);
  const std::vector<CalibrationMatrix> singular{CalibrationMatrix::from_errors(0.5, 0.5)};
  EXPECT_THROW(mitigate_probs({"Z", 1, {1, 0}}, singular), std::domain_error);
}

TEST(SpectralCorrect, ClampsAndRenormalizes) {
  const double d[] = {0.6, 0.5, -0.1, 0.0};
  const DensityMatrix out = spectral_correct(DensityMatrix(ComplexMatrix::diagonal(d)));
  const double e[] = {6.0 / 11.0, 5.0 / 11.0, 0.0, 0.0};
  EXPECT_LE(max_abs_diff(out.mat(), ComplexMatrix::diagonal(e)), 1e-12);
}

TEST(SpectralCorrect, OutputIsPhysicalAndIdempotent) {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 100; ++rep) {
    // Push a random state off the PSD cone with a traceless Hermitian kick.
    ComplexMatrix m = testing::random_density_matrix(8, rng);
    ComplexMatrix kick = testing::random_hermitian(8, rng);
    const cplx tr = kick.trace() / 8.0;
    for (std::size_t i = 0; i < 8; ++i) kick(i, i) -= tr;
    m += cplx(0.05) * kick;
    const DensityMatrix once = spectral_correct(DensityMatrix(m));
    EXPECT_GE(once.min_eigenvalue(), -1e-12);
    EXPECT_NEAR(once.mat().trace().real(), 1.0, 1e-12);
    const DensityMatrix twice = spectral_correct(once);
    EXPECT_LE(max_abs_diff(once, twice), 1e-12);
  }
}

TEST(SpectralCorrect, LeavesPhysicalStatesAlone) {
  std::mt19937_64 rng(33);
  const DensityMatrix rho(testing::random_density_matrix(4, rng));
  EXPECT_LE(max_abs_diff(spectral_correct(rho), rho), 1e-12);
  const DensityMatrix w = DensityMatrix::from_pure(w_closed_form());
  EXPECT_LE(max_abs_diff(spectral_correct(w), w), 1e-12);
}

}  // namespace
}  // namespace wtomo
