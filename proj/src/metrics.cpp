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

#include "wtomo/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wtomo {

double fidelity_pure(const ComplexVector& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) throw DimensionError("fidelity_pure: dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw std::invalid_argument("fidelity_pure: state is not normalized");
  const double overlap = inner(psi, rho.mat() * psi).real();
  if (overlap < -1e-12 || overlap > 1.0 + 1e-12) {
    throw std::domain_error("fidelity_pure: <psi|rho|psi> = " + std::to_string(overlap) + " outside [0, 1]");
  }
  return std::sqrt(std::clamp(overlap, 0.0, 1.0));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_distance: dimension mismatch");
  const EigenSystem es = eig_hermitian(a.mat() - b.mat());
  double s = 0.0;
  for (double l : es.values) s += std::abs(l);
  return 0.5 * s;
}

}  // namespace wtomo
