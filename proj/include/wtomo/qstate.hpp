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

#ifndef WTOMO_QSTATE_HPP
#define WTOMO_QSTATE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wtomo/density.hpp"
#include "wtomo/linalg.hpp"

namespace wtomo {

enum class GateKind { I, X, H, RX, RY, CNOT };

/// A one- or two-qubit gate addressed to register positions.
///
/// For CNOT, `qubit` is the control and `target` the target.
struct Gate {
  GateKind kind = GateKind::I;
  std::size_t qubit = 0;
  std::size_t target = 0;
  double angle = 0.0;  // radians, RX/RY only

  static Gate i(std::size_t q) { return {GateKind::I, q, 0, 0.0}; }
  static Gate x(std::size_t q) { return {GateKind::X, q, 0, 0.0}; }
  static Gate h(std::size_t q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate rx(std::size_t q, double theta) { return {GateKind::RX, q, 0, theta}; }
  static Gate ry(std::size_t q, double theta) { return {GateKind::RY, q, 0, theta}; }
  static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, control, target, 0.0}; }

  std::string name() const;
};

/// 2x2 matrix of a single-qubit gate (throws for CNOT).
ComplexMatrix local_matrix(const Gate& g);

/// Lift `g` to the full 2^n register, identity on the other qubits.
ComplexMatrix gate_matrix(const Gate& g, std::size_t nqubits);

/// Product of lifted gates; gates[0] acts first.
ComplexMatrix circuit_unitary(const std::vector<Gate>& gates, std::size_t nqubits);

/// A pre-measurement unitary recipe followed by a computational-basis readout.
///
/// Labels follow `[C]<g>...<g>[_<pair>]` with one letter per qubit:
/// Z = no gate, X = H, Y = RX(pi/2). A leading `C` with a `_<pair>` suffix
/// (AB, BC or CA; first letter is the control) means the CNOT acts on the
/// state before the local gates, e.g. `CXZZ_AB` = (H x I x I) CNOT_AB.
struct MeasurementSetting {
  std::string label;
  std::size_t nqubits = 0;
  std::vector<Gate> gates;  // application order
};

MeasurementSetting parse_setting(std::string_view label);

ComplexMatrix setting_unitary(const MeasurementSetting& s);

/// The 17 settings for full three-qubit tomography, in table order.
const std::vector<MeasurementSetting>& three_qubit_settings();
/// The 7 settings for two-qubit tomography, in table order.
const std::vector<MeasurementSetting>& two_qubit_settings();

/// Gate sequence preparing the W state from |000>.
std::vector<Gate> w_preparation_circuit();

/// (|100> + |010> + |001>)/sqrt(3), built by running the preparation circuit
/// on |000> and checked against the closed form.
ComplexVector prepare_w();

/// Closed form of the W state, for comparison.
ComplexVector w_closed_form();

/// (|000> + |111>)/sqrt(2).
ComplexVector ghz_state();

}  // namespace wtomo

#endif  // WTOMO_QSTATE_HPP
