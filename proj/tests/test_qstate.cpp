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

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "wtomo/qstate.hpp"

namespace wtomo {
namespace {

const double kS = 1.0 / std::sqrt(2.0);

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

TEST(Gates, SingleQubitMatrices) {
  EXPECT_LE(max_abs_diff(local_matrix(Gate::h(0)), ComplexMatrix{{kS, kS}, {kS, -kS}}), 1e-15);
  EXPECT_LE(max_abs_diff(local_matrix(Gate::x(0)), ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}), 0.0);
  // RX(pi/2) = (I - iX)/sqrt(2)
  EXPECT_LE(max_abs_diff(local_matrix(Gate::rx(0, M_PI / 2)), ComplexMatrix{{kS, cplx(0, -kS)}, {cplx(0, -kS), kS}}),
            1e-15);
  EXPECT_LE(max_abs_diff(local_matrix(Gate::ry(0, M_PI)), ComplexMatrix{{0.0, -1.0}, {1.0, 0.0}}), 1e-15);
  EXPECT_THROW(local_matrix(Gate::cnot(0, 1)), std::invalid_argument);
}

TEST(Gates, CnotPermutesBasisStates) {
  // control B, target C on three qubits: |x1y> -> |x1(1-y)>
  const ComplexMatrix u = gate_matrix(Gate::cnot(1, 2), 3);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t y = (x & 2U) ? (x ^ 1U) : x;
    for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(u(r, x), cplx(r == y ? 1.0 : 0.0));
  }
  // control C, target A
  const ComplexMatrix v = gate_matrix(Gate::cnot(2, 0), 3);
  EXPECT_EQ(v(0b101, 0b001), cplx(1.0));
  EXPECT_EQ(v(0b110, 0b110), cplx(1.0));
  EXPECT_THROW(gate_matrix(Gate::cnot(1, 1), 3), std::invalid_argument);
  EXPECT_THROW(gate_matrix(Gate::h(3), 3), std::out_of_range);
}

TEST(Gates, CircuitOrderIsFirstGateFirst) {
  // X then H on |0> gives |->; H then X gives |+>
  const ComplexVector zero = ComplexVector::basis(2, 0);
  const ComplexVector a = circuit_unitary({Gate::x(0), Gate::h(0)}, 1) * zero;
  EXPECT_NEAR(std::abs(a[1] - cplx(-kS)), 0.0, 1e-15);
  const ComplexVector b = circuit_unitary({Gate::h(0), Gate::x(0)}, 1) * zero;
  EXPECT_NEAR(std::abs(b[1] - cplx(kS)), 0.0, 1e-15);
}

TEST(Settings, TablesHaveTheExpectedLabelsInOrder) {
  std::vector<std::string> labels;
  for (const auto& s : three_qubit_settings()) labels.push_back(s.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"ZZZ", "XZZ", "ZXZ", "ZZX", "YZZ", "ZYZ", "ZZY", "CXZZ_AB", "CZXZ_BC",
                                              "CZZX_CA", "CYZZ_AB", "CZYZ_BC", "CZZY_CA", "CXXZ_BC", "CYYZ_BC",
                                              "CXYZ_BC", "CYXZ_BC"}));
  labels.clear();
  for (const auto& s : two_qubit_settings()) labels.push_back(s.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"ZZ", "XZ", "ZY", "ZX", "YZ", "CXZ_AB", "CYZ_AB"}));
}

TEST(Settings, AllUnitariesAreUnitary) {
  for (const auto* set : {&three_qubit_settings(), &two_qubit_settings()}) {
    for (const auto& s : *set) EXPECT_LE(unitarity_defect(setting_unitary(s)), 1e-12) << s.label;
  }
}

TEST(Settings, ControlledLabelMeansCnotThenLocalGates) {
  const MeasurementSetting s = parse_setting("CXZZ_AB");
  const ComplexMatrix expected =
      kron(local_matrix(Gate::h(0)), ComplexMatrix::identity(4)) * gate_matrix(Gate::cnot(0, 1), 3);
  EXPECT_LE(max_abs_diff(setting_unitary(s), expected), 1e-15);

  const MeasurementSetting t = parse_setting("CZZY_CA");
  const ComplexMatrix expected_t =
      kron(ComplexMatrix::identity(4), local_matrix(Gate::rx(0, M_PI / 2))) * gate_matrix(Gate::cnot(2, 0), 3);
  EXPECT_LE(max_abs_diff(setting_unitary(t), expected_t), 1e-15);
}

TEST(Settings, ParserRejectsMalformedLabels) {
  for (const char* bad : {"", "ZQZ", "CXZZ", "XZZ_AB", "CXZZ_AA", "CXZZ_AD", "CXZ_BC", "ZZZZZ"}) {
    EXPECT_THROW(parse_setting(bad), std::invalid_argument) << bad;
  }
  EXPECT_EQ(parse_setting("ZY").nqubits, 2U);
}

TEST(WState, PreparationMatchesClosedForm) {
  const ComplexVector w = prepare_w();
  const ComplexVector ref = w_closed_form();
  EXPECT_NEAR(std::abs(inner(ref, w)), 1.0, 1e-12);
  const double third = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(ref[4] - third), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ref[2] - third), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ref[1] - third), 0.0, 1e-15);
  EXPECT_LE(unitarity_defect(circuit_unitary(w_preparation_circuit(), 3)), 1e-12);
}

TEST(WState, MarginalsAreIdenticalForEveryPair) {
  const ComplexMatrix rho = outer(w_closed_form());
  const ComplexMatrix ab = testing::brute_partial_trace(rho, 3, {0, 1});
  EXPECT_LE(max_abs_diff(ab, testing::brute_partial_trace(rho, 3, {1, 2})), 1e-15);
  EXPECT_LE(max_abs_diff(ab, testing::brute_partial_trace(rho, 3, {0, 2})), 1e-15);
}

TEST(GhzState, Amplitudes) {
  const ComplexVector g = ghz_state();
  EXPECT_NEAR(g[0].real(), kS, 1e-15);
  EXPECT_NEAR(g[7].real(), kS, 1e-15);
  EXPECT_NEAR(g.norm(), 1.0, 1e-15);
}

}  // namespace
}  // namespace wtomo
