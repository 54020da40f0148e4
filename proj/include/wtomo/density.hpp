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

#ifndef WTOMO_DENSITY_HPP
#define WTOMO_DENSITY_HPP

#include <cstddef>
#include <span>

#include "wtomo/linalg.hpp"

namespace wtomo {

/// Hermitian, unit-trace matrix on `nqubits` qubits.
///
/// Positivity is not enforced here: raw tomographic estimates are routinely
/// slightly indefinite until `spectral_correct` is applied. Use `min_eigenvalue`
/// to check.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;

  DensityMatrix() = default;
  /// Validates shape, Hermiticity and unit trace.
  explicit DensityMatrix(ComplexMatrix mat);

  static DensityMatrix from_pure(const ComplexVector& psi);
  /// Rescales `mat` to unit trace before validation. Throws if the trace is
  /// not positive.
  static DensityMatrix normalized(ComplexMatrix mat);
  static DensityMatrix maximally_mixed(std::size_t nqubits);

  std::size_t nqubits() const { return nqubits_; }
  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& mat() const { return mat_; }
  cplx operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  double min_eigenvalue() const;

 private:
  std::size_t nqubits_ = 0;
  ComplexMatrix mat_;
};

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace wtomo

#endif  // WTOMO_DENSITY_HPP
