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

#ifndef WTOMO_METRICS_HPP
#define WTOMO_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wtomo/density.hpp"
#include "wtomo/linalg.hpp"

namespace wtomo {

/// sqrt(<psi|rho|psi>), the square-root fidelity convention. Values within
/// 1e-12 outside [0, 1] are clamped; larger excursions throw.
double fidelity_pure(const ComplexVector& psi, const DensityMatrix& rho);

/// (1/2) sum |eig(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// One row of the trial report. Fidelities are square-root fidelities
/// against the target W state; missing values mean that branch was not run
/// or failed.
struct FidelityReport {
  int trial_id = 0;
  std::uint64_t shots = 0;  // 0 in exact mode
  bool mitigated = false;
  std::optional<double> f_full;
  std::optional<double> f_parts;
  double residual_ab = 0.0;
  double residual_bc = 0.0;
};

}  // namespace wtomo

#endif  // WTOMO_METRICS_HPP
