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

#include <Eigen/Dense>

#include "test_support.hpp"
#include "wtomo/metrics.hpp"
#include "wtomo/qstate.hpp"

namespace wtomo {
namespace {

TEST(Fidelity, PureStateCases) {
  const ComplexVector w = w_closed_form();
  EXPECT_NEAR(fidelity_pure(w, DensityMatrix::from_pure(w)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity_pure(w, DensityMatrix::from_pure(ghz_state())), 0.0, 1e-15);
  EXPECT_NEAR(fidelity_pure(w, DensityMatrix::maximally_mixed(3)), std::sqrt(1.0 / 8.0), 1e-15);
}

TEST(Fidelity, IsSquareRootOfExpectation) {
  std::mt19937_64 rng(51);
  const ComplexVector psi = testing::random_pure(8, rng);
  const DensityMatrix rho(testing::random_density_matrix(8, rng));
  cplx e = 0.0;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) e += std::conj(psi[a]) * rho(a, b) * psi[b];
  }
  EXPECT_NEAR(fidelity_pure(psi, rho), std::sqrt(e.real()), 1e-14);
}

TEST(Fidelity, RejectsBadInput) {
  EXPECT_THROW(fidelity_pure(w_closed_form(), DensityMatrix::maximally_mixed(2)), DimensionError);
  // An indefinite matrix can give a clearly negative expectation.
  const double d[] = {1.2, -0.2};
  EXPECT_THROW(fidelity_pure(ComplexVector::basis(2, 1), DensityMatrix(ComplexMatrix::diagonal(d))),
               std::domain_error);
}

TEST(TraceDistance, KnownValues) {
  const DensityMatrix a = DensityMatrix::from_pure(ComplexVector::basis(2, 0));
  const DensityMatrix b = DensityMatrix::from_pure(ComplexVector::basis(2, 1));
  EXPECT_NEAR(trace_distance(a, b), 1.0, 1e-15);
  EXPECT_NEAR(trace_distance(a, a), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(a, DensityMatrix::maximally_mixed(1)), 0.5, 1e-15);
}

TEST(TraceDistance, MatchesEigenOracle) {
  std::mt19937_64 rng(52);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix a(testing::random_density_matrix(8, rng));
    const DensityMatrix b(testing::random_density_matrix(8, rng));
    Eigen::MatrixXcd diff(8, 8);
    for (std::size_t r = 0; r < 8; ++r) {
      for (std::size_t c = 0; c < 8; ++c) diff(r, c) = a(r, c) - b(r, c);
    }
    const double ref = 0.5 * Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(diff).eigenvalues().cwiseAbs().sum();
    EXPECT_NEAR(trace_distance(a, b), ref, 1e-12);
    EXPECT_NEAR(trace_distance(a, b), trace_distance(b, a), 1e-14);
  }
  EXPECT_THROW(trace_distance(DensityMatrix::maximally_mixed(1), DensityMatrix::maximally_mixed(2)), DimensionError);
}

}  // namespace
}  // namespace wtomo
