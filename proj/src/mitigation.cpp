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

#include "wtomo/mitigation.hpp"

#include <string>
#include <vector>

namespace wtomo {

ProbTable mitigate_probs(const ProbTable& p, std::span<const CalibrationMatrix> fs) {
  if (fs.size() != p.nqubits) {
    throw std::invalid_argument("mitigate_probs: " + std::to_string(fs.size()) + " calibration matrices for " +
                                std::to_string(p.nqubits) + " measured qubits");
  }
  std::vector<CalibrationMatrix> inverses;
  inverses.reserve(fs.size());
  for (const CalibrationMatrix& f : fs) inverses.push_back(f.inverse());
  return {p.label, p.nqubits, apply_per_qubit(p.probs, inverses)};
}

DensityMatrix spectral_correct(const DensityMatrix& rho) {
  EigenSystem es = eig_hermitian(rho.mat());
  double positive = 0.0;
  for (double& l : es.values) {
    if (l < 0.0) l = 0.0;
    positive += l;
  }
  if (!(positive > 0.0)) throw DegenerateSpectrumError("spectral_correct: no positive eigenvalue");
  for (double& l : es.values) l /= positive;
  ComplexMatrix m = from_spectrum(es.values, es.vectors);
  // remove rounding drift of the trace
  m *= cplx(1.0 / m.trace().real());
  return DensityMatrix(std::move(m));
}

}  // namespace wtomo
