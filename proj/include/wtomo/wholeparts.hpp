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

#ifndef WTOMO_WHOLEPARTS_HPP
#define WTOMO_WHOLEPARTS_HPP

// Reconstruction of a pure three-qubit state from two of its two-qubit
// marginals, rho_AB and rho_BC.
//
// A pure |psi> has two Schmidt forms,
//
//   |psi> = sum_i e^{i alpha_i} sqrt(lA_i) |i;A>  (x) |i;BC>
//         = sum_k e^{i gamma_k} sqrt(lC_k) |k;AB> (x) |k;C>,
//
// where (lA_i, |i;A>) diagonalize rho_A, |i;BC> are the matching eigenvectors
// of rho_BC, and likewise for C. Projecting both forms onto the product basis
// |i;A>|j;B>|k;C> gives
//
//   e^{i alpha_i} sqrt(lA_i) Acal^i_jk = e^{i gamma_k} sqrt(lC_k) Ccal^k_ij,
//   Acal^i_jk = <jk|i;BC>,  Ccal^k_ij = <ij|k;AB>,
//
// which fixes the phases up to one global phase whenever the spectrum of
// rho_A is non-degenerate.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtomo/density.hpp"
#include "wtomo/linalg.hpp"

namespace wtomo {

class InconsistentMarginalsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// rho_A has (nearly) equal eigenvalues; the phase solve is ambiguous
/// (GHZ-like input).
class AmbiguousPhaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TooMixedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MarginalPair {
  DensityMatrix rho_ab;
  DensityMatrix rho_bc;
  /// Allowed max-norm disagreement between the two estimates of rho_B.
  double eps_b = 1e-10;
  std::string label_ab = "AB";
  std::string label_bc = "BC";
};

struct SinglePartyMarginals {
  DensityMatrix rho_a;
  DensityMatrix rho_b;  // mean of Tr_A rho_AB and Tr_C rho_BC
  DensityMatrix rho_c;
  double b_discrepancy = 0.0;
};

SinglePartyMarginals single_party_marginals(const MarginalPair& pair);

struct OverlapTensors {
  std::array<double, 2> lambda_a{};
  std::array<double, 2> lambda_c{};
  std::array<ComplexVector, 2> basis_a;   // |i;A>
  std::array<ComplexVector, 2> basis_b;   // |j;B>
  std::array<ComplexVector, 2> basis_c;   // |k;C>
  std::array<ComplexVector, 2> vecs_bc;   // |i;BC>, paired with lambda_a[i]
  std::array<ComplexVector, 2> vecs_ab;   // |k;AB>, paired with lambda_c[k]
  /// a_tensor[i][j][k] = <j;B k;C | i;BC>
  std::array<std::array<std::array<cplx, 2>, 2>, 2> a_tensor{};
  /// c_tensor[k][i][j] = <i;A j;B | k;AB>
  std::array<std::array<std::array<cplx, 2>, 2>, 2> c_tensor{};
  /// Eigenvalue mass beyond the top two, per two-qubit marginal.
  double truncated_ab = 0.0;
  double truncated_bc = 0.0;
};

/// Eigendecomposes the marginals and builds the overlap tensors, keeping the
/// two largest eigenvalues of each two-qubit marginal (a qubit purified
/// against two qubits has Schmidt rank at most two). Throws TooMixedError if
/// the kept mass of either marginal is below 0.8.
OverlapTensors purify_structures(const MarginalPair& pair);

struct PhaseSolution {
  std::array<double, 2> alpha{};
  std::array<double, 2> gamma{};  // gamma[0] == 0
  /// max over i,j,k of |e^{i alpha_i} a_ijk - e^{i gamma_k} c_ijk|
  double residual = 0.0;
};

/// Default minimal gap between the two eigenvalues of rho_A.
inline constexpr double kDegeneracyGap = 1e-6;

PhaseSolution solve_phases(const OverlapTensors& t, double degeneracy_gap = kDegeneracyGap);

struct ReconstructionResult {
  ComplexVector psi;
  PhaseSolution phases;
  double residual_ab = 0.0;  // |Tr_C |psi><psi| - rho_AB|_max
  double residual_bc = 0.0;  // |Tr_A |psi><psi| - rho_BC|_max
  double truncated_ab = 0.0;
  double truncated_bc = 0.0;
  double b_discrepancy = 0.0;
};

/// Global phase is fixed so the largest-magnitude amplitude is real positive.
ReconstructionResult diosi_reconstruct(const MarginalPair& pair, double degeneracy_gap = kDegeneracyGap);

/// Reorders the qubits of a three-qubit state: qubit q of the output is
/// qubit perm[q] of the input. Lets (AC, BC)-style pairs be fed in as AB, BC.
ComplexVector permute_qubits(const ComplexVector& psi, const std::array<std::size_t, 3>& perm);
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const std::size_t> perm);

}  // namespace wtomo

#endif  // WTOMO_WHOLEPARTS_HPP
