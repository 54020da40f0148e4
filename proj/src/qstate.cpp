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

#include "wtomo/qstate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wtomo {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t qubit_from_letter(char c) {
  if (c < 'A' || c > 'D') throw std::invalid_argument(std::string("unknown qubit letter '") + c + "'");
  return static_cast<std::size_t>(c - 'A');
}

void check_index(std::size_t q, std::size_t nqubits) {
  if (q >= nqubits) {
    throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(nqubits) +
                            " qubits");
  }
}

std::vector<MeasurementSetting> parse_all(std::initializer_list<const char*> labels) {
  std::vector<MeasurementSetting> out;
  for (const char* l : labels) out.push_back(parse_setting(l));
  return out;
}

}  // namespace

std::string Gate::name() const {
  switch (kind) {
    case GateKind::I: return "I";
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::RX: return "RX(" + std::to_string(angle) + ")";
    case GateKind::RY: return "RY(" + std::to_string(angle) + ")";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

ComplexMatrix local_matrix(const Gate& g) {
  const cplx I(0.0, 1.0);
  switch (g.kind) {
    case GateKind::I: return ComplexMatrix::identity(2);
    case GateKind::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::H: return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
    case GateKind::RX: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      return {{c, -I * s}, {-I * s, c}};
    }
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      return {{c, -s}, {s, c}};
    }
    case GateKind::CNOT: break;
  }
  throw std::invalid_argument("local_matrix: " + g.name() + " is not a single-qubit gate");
}

ComplexMatrix gate_matrix(const Gate& g, std::size_t nqubits) {
  check_index(g.qubit, nqubits);
  if (g.kind != GateKind::CNOT) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    const ComplexMatrix local = local_matrix(g);
    for (std::size_t q = 0; q < nqubits; ++q) out = kron(out, q == g.qubit ? local : ComplexMatrix::identity(2));
    return out;
  }
  check_index(g.target, nqubits);
  if (g.target == g.qubit) throw std::invalid_argument("CNOT control and target coincide");
  // |0><0|_c (x) I + |1><1|_c (x) X_t
  const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix x = local_matrix(Gate::x(0));
  ComplexMatrix off = ComplexMatrix::identity(1);
  ComplexMatrix on = ComplexMatrix::identity(1);
  for (std::size_t q = 0; q < nqubits; ++q) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    off = kron(off, q == g.qubit ? p0 : id);
    on = kron(on, q == g.qubit ? p1 : (q == g.target ? x : id));
  }
  return off + on;
}

ComplexMatrix circuit_unitary(const std::vector<Gate>& gates, std::size_t nqubits) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << nqubits);
  for (const Gate& g : gates) u = gate_matrix(g, nqubits) * u;
  return u;
}

MeasurementSetting parse_setting(std::string_view label) {
  MeasurementSetting s;
  s.label = std::string(label);
  std::string_view body = label;
  bool has_cnot = false;
  std::size_t control = 0;
  std::size_t target = 0;
  if (const auto us = body.find('_'); us != std::string_view::npos) {
    const std::string_view pair = body.substr(us + 1);
    body = body.substr(0, us);
    if (pair.size() != 2 || body.empty() || body.front() != 'C') {
      throw std::invalid_argument("malformed setting label '" + s.label + "'");
    }
    control = qubit_from_letter(pair[0]);
    target = qubit_from_letter(pair[1]);
    if (control == target) throw std::invalid_argument("setting '" + s.label + "': CNOT on a single qubit");
    body.remove_prefix(1);
    has_cnot = true;
  }
  if (body.empty() || body.size() > 4) throw std::invalid_argument("malformed setting label '" + s.label + "'");
  s.nqubits = body.size();
  if (has_cnot) {
    if (control >= s.nqubits || target >= s.nqubits) {
      throw std::invalid_argument("setting '" + s.label + "': CNOT pair outside the register");
    }
    s.gates.push_back(Gate::cnot(control, target));
  }
  for (std::size_t q = 0; q < body.size(); ++q) {
    switch (body[q]) {
      case 'Z': break;
      case 'X': s.gates.push_back(Gate::h(q)); break;
      case 'Y': s.gates.push_back(Gate::rx(q, std::numbers::pi / 2)); break;
      default: throw std::invalid_argument("setting '" + s.label + "': unknown basis letter '" + body[q] + "'");
    }
  }
  return s;
}

ComplexMatrix setting_unitary(const MeasurementSetting& s) {
  if (s.nqubits == 0) throw std::invalid_argument("setting '" + s.label + "' has no qubits");
  return circuit_unitary(s.gates, s.nqubits);
}

const std::vector<MeasurementSetting>& three_qubit_settings() {
  static const std::vector<MeasurementSetting> settings = parse_all({
      "ZZZ",     "XZZ",     "ZXZ",     "ZZX",     "YZZ",     "ZYZ",     "ZZY",     "CXZZ_AB", "CZXZ_BC",
      "CZZX_CA", "CYZZ_AB", "CZYZ_BC", "CZZY_CA", "CXXZ_BC", "CYYZ_BC", "CXYZ_BC", "CYXZ_BC",
  });
  return settings;
}

const std::vector<MeasurementSetting>& two_qubit_settings() {
  static const std::vector<MeasurementSetting> settings =
      parse_all({"ZZ", "XZ", "ZY", "ZX", "YZ", "CXZ_AB", "CYZ_AB"});
  return settings;
}

std::vector<Gate> w_preparation_circuit() {
  const double theta = 2.0 * std::acos(1.0 / std::sqrt(3.0));
  const double quarter = std::numbers::pi / 4;
  return {
      // sqrt(1/3)|000> + sqrt(2/3)|100>
      Gate::ry(0, theta),
      // Hadamard-like split of B conditioned on A = 1:
      // sqrt(1/3)(|000> + |100> + |110>)
      Gate::ry(1, quarter),
      Gate::cnot(0, 1),
      Gate::ry(1, -quarter),
      // |110> -> |010>
      Gate::cnot(1, 0),
      // C <- NOT(A xor B)
      Gate::cnot(0, 2),
      Gate::cnot(1, 2),
      Gate::x(2),
  };
}

ComplexVector w_closed_form() {
  const double a = 1.0 / std::sqrt(3.0);
  return ComplexVector({0.0, a, a, 0.0, a, 0.0, 0.0, 0.0});
}

ComplexVector prepare_w() {
  const ComplexVector psi = circuit_unitary(w_preparation_circuit(), 3) * ComplexVector::basis(8, 0);
  if (std::abs(std::abs(inner(w_closed_form(), psi)) - 1.0) > 1e-12) {
    throw std::logic_error("W preparation circuit does not reproduce the closed-form state");
  }
  return psi;
}

ComplexVector ghz_state() { return ComplexVector({kInvSqrt2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, kInvSqrt2}); }

}  // namespace wtomo
