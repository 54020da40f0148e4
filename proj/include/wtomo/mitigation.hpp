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

#ifndef WTOMO_MITIGATION_HPP
#define WTOMO_MITIGATION_HPP

#include <span>
#include <stdexcept>

#include "wtomo/calibration.hpp"
#include "wtomo/density.hpp"
#include "wtomo/noisesim.hpp"

namespace wtomo {

/// p' = (F_0 (x) F_1 (x) ...)^-1 p, applied as the Kronecker product of the
/// single-qubit inverses. Entries of p' may come out slightly negative; they
/// are passed through unclipped.
ProbTable mitigate_probs(const ProbTable& p, std::span<const CalibrationMatrix> fs);

class DegenerateSpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nearest physical state by eigenvalue clamping: negative eigenvalues are set
/// to zero, the rest rescaled to unit sum, and the matrix rebuilt from its
/// eigenvectors. Throws DegenerateSpectrumError if no eigenvalue is positive.
DensityMatrix spectral_correct(const DensityMatrix& rho);

}  // namespace wtomo

#endif  // WTOMO_MITIGATION_HPP
