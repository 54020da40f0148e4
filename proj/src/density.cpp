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

#include "wtomo/density.hpp"

#include <cmath>
#include <string>

namespace wtomo {

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (!mat_.square()) throw DimensionError("DensityMatrix: matrix is not square");
  nqubits_ = qubit_count_for_dim(mat_.rows());
  if (!all_finite(mat_)) throw std::invalid_argument("DensityMatrix: non-finite entry");
  const double defect = hermiticity_defect(mat_);
  if (defect > kHermitianTol) {
    throw NotHermitianError("DensityMatrix: hermiticity defect " + std::to_string(defect));
  }
  const cplx tr = mat_.trace();
  if (std::abs(tr - cplx(1.0)) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  // exact Hermitian storage
  for (std::size_t r = 0; r < dim(); ++r) {
    mat_(r, r) = mat_(r, r).real();
    for (std::size_t c = r + 1; c < dim(); ++c) mat_(c, r) = std::conj(mat_(r, c));
  }
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi) { return DensityMatrix(outer(psi)); }

DensityMatrix DensityMatrix::normalized(ComplexMatrix mat) {
  if (!mat.square()) throw DimensionError("DensityMatrix: matrix is not square");
  const double tr = mat.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("DensityMatrix: trace is not positive");
  mat *= cplx(1.0 / tr);
  return DensityMatrix(std::move(mat));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t nqubits) {
  const std::size_t d = std::size_t{1} << nqubits;
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= cplx(1.0 / static_cast<double>(d));
  return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue() const { return eig_hermitian(mat_).values.back(); }

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.mat(), rho.nqubits(), keep));
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) { return max_abs_diff(a.mat(), b.mat()); }

}  // namespace wtomo
