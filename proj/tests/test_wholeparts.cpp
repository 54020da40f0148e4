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
#include "wtomo/qstate.hpp"
#include "wtomo/wholeparts.hpp"

namespace wtomo {
namespace {

using testing::brute_partial_trace;
using testing::overlap2;
using testing::random_pure;

MarginalPair exact_pair(const ComplexVector& psi) {
  const ComplexMatrix rho = outer(psi);
  return {DensityMatrix(brute_partial_trace(rho, 3, {0, 1})), DensityMatrix(brute_partial_trace(rho, 3, {1, 2}))};
}

double lambda_gap(const ComplexVector& psi) {
  const ComplexMatrix a = brute_partial_trace(outer(psi), 3, {0});
  // eigenvalues of a 2x2 Hermitian unit-trace matrix: 1/2 +- sqrt((a00-a11)^2/4 + |a01|^2)
  const double half_diff = 0.5 * (a(0, 0).real() - a(1, 1).real());
  return 2.0 * std::sqrt(half_diff * half_diff + std::norm(a(0, 1)));
}

TEST(Diosi, RecoversTheWState) {
  const ReconstructionResult r = diosi_reconstruct(exact_pair(w_closed_form()));
  EXPECT_NEAR(overlap2(r.psi, w_closed_form()), 1.0, 1e-12);
  EXPECT_LE(r.residual_ab, 1e-12);
  EXPECT_LE(r.residual_bc, 1e-12);
  EXPECT_LE(r.phases.residual, 1e-12);
  EXPECT_NEAR(r.truncated_ab, 0.0, 1e-12);
}

TEST(Diosi, RecoversRandomPureStates) {
  std::mt19937_64 rng(41);
  int tested = 0;
  double worst = 1.0;
  while (tested < 100) {
    const ComplexVector psi = random_pure(8, rng);
    if (lambda_gap(psi) <= 0.05) continue;
    ++tested;
    const ReconstructionResult r = diosi_reconstruct(exact_pair(psi));
    worst = std::min(worst, overlap2(r.psi, psi));
  }
  EXPECT_GE(worst, 1.0 - 1e-8);
}

TEST(Diosi, ProductAndPartlyProductStates) {
  // |1> (x) Bell: rho_A is pure, so only one Schmidt term survives.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector psi(8);
  psi[0b100] = s;
  psi[0b111] = s;
  EXPECT_NEAR(overlap2(diosi_reconstruct(exact_pair(psi)).psi, psi), 1.0, 1e-12);

  ComplexVector prod(8);
  prod[0b010] = 1.0;
  EXPECT_NEAR(overlap2(diosi_reconstruct(exact_pair(prod)).psi, prod), 1.0, 1e-12);
}

TEST(Diosi, GhzMarginalsAreAmbiguous) {
  EXPECT_THROW(diosi_reconstruct(exact_pair(ghz_state())), AmbiguousPhaseError);
}

TEST(Diosi, InconsistentSharedMarginalIsRejected) {
  const MarginalPair w = exact_pair(w_closed_form());
  MarginalPair bad{w.rho_ab, DensityMatrix::maximally_mixed(2)};
  EXPECT_THROW(diosi_reconstruct(bad), InconsistentMarginalsError);
  bad.eps_b = 1.0;
  EXPECT_THROW(diosi_reconstruct(bad), TooMixedError);
}

TEST(Diosi, ReportsTheRhoBDiscrepancy) {
  const MarginalPair w = exact_pair(w_closed_form());
  ComplexMatrix ab = w.rho_ab.mat();
  // moves weight from |01> to |00>: the AB copy of rho_B shifts by 0.01
  ab(0, 0) += 0.01;
  ab(1, 1) -= 0.01;
  const MarginalPair shifted{DensityMatrix(ab), w.rho_bc, 0.05};
  const SinglePartyMarginals m = single_party_marginals(shifted);
  EXPECT_NEAR(m.b_discrepancy, 0.01, 1e-12);
  EXPECT_NEAR(diosi_reconstruct(shifted).b_discrepancy, 0.01, 1e-12);
}

TEST(Diosi, CovariantUnderLocalUnitaries) {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 10; ++rep) {
    ComplexVector psi = random_pure(8, rng);
    if (lambda_gap(psi) <= 0.05) continue;
    const ComplexMatrix u = kron(kron(testing::random_qubit_unitary(rng), testing::random_qubit_unitary(rng)),
                                 testing::random_qubit_unitary(rng));
    const ComplexVector moved = u * psi;
    const ReconstructionResult a = diosi_reconstruct(exact_pair(psi));
    const ReconstructionResult b = diosi_reconstruct(exact_pair(moved));
    EXPECT_NEAR(overlap2(u * a.psi, b.psi), 1.0, 1e-9);
  }
}

TEST(Diosi, GlobalPhaseConvention) {
  std::mt19937_64 rng(43);
  const ComplexVector psi = random_pure(8, rng);
  const ComplexVector out = diosi_reconstruct(exact_pair(psi)).psi;
  std::size_t big = 0;
  for (std::size_t i = 1; i < 8; ++i) {
    if (std::abs(out[i]) > std::abs(out[big])) big = i;
  }
  EXPECT_EQ(out[big].imag(), 0.0);
  EXPECT_GT(out[big].real(), 0.0);
}

TEST(Diosi, RejectsWrongDimensions) {
  const MarginalPair bad{DensityMatrix::maximally_mixed(1), DensityMatrix::maximally_mixed(2)};
  EXPECT_THROW(diosi_reconstruct(bad), DimensionError);
}

TEST(PermuteQubits, MovesBasisStatesAndInverts) {
  const ComplexVector e = ComplexVector::basis(8, 0b100);  // A set
  // output qubit q is input qubit perm[q]: perm {1,2,0} puts input A at output C
  const ComplexVector moved = permute_qubits(e, {1, 2, 0});
  EXPECT_EQ(moved[0b001], cplx(1.0));
  std::mt19937_64 rng(44);
  const ComplexVector psi = random_pure(8, rng);
  const ComplexVector back = permute_qubits(permute_qubits(psi, {1, 2, 0}), {2, 0, 1});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(back[i], psi[i]);
  EXPECT_THROW(permute_qubits(psi, {0, 0, 1}), std::invalid_argument);
}

TEST(PermuteQubits, DensityVersionAgreesWithVectorVersion) {
  std::mt19937_64 rng(45);
  const ComplexVector psi = random_pure(8, rng);
  const std::size_t perm[] = {2, 0, 1};
  const DensityMatrix a = permute_qubits(DensityMatrix::from_pure(psi), perm);
  const DensityMatrix b = DensityMatrix::from_pure(permute_qubits(psi, {2, 0, 1}));
  EXPECT_LE(max_abs_diff(a, b), 1e-15);
}

TEST(PermuteQubits, ReconstructsFromAcAndCbStylePairs) {
  // Given rho_AC and rho_CB, relabel to (A, C, B) so the shared qubit sits in
  // the middle, rebuild, then undo the relabeling.
  std::mt19937_64 rng(46);
  ComplexVector psi;
  do {
    psi = random_pure(8, rng);
  } while (lambda_gap(psi) <= 0.05);
  const ComplexVector relabeled = permute_qubits(psi, {0, 2, 1});
  const ReconstructionResult r = diosi_reconstruct(exact_pair(relabeled));
  EXPECT_NEAR(overlap2(permute_qubits(r.psi, {0, 2, 1}), psi), 1.0, 1e-9);
}

}  // namespace
}  // namespace wtomo
