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

#ifndef WTOMO_LINALG_HPP
#define WTOMO_LINALG_HPP

// Small dense complex linear algebra for registers of up to four qubits.
//
// Everything here is value-typed. Matrices are row-major. Basis index bits are
// ordered with qubit 0 (A) as the most significant bit, so |100> is index 4 on
// three qubits.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtomo {

using cplx = std::complex<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim) {}
  explicit ComplexVector(std::vector<cplx> data);
  ComplexVector(std::initializer_list<cplx> init);

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  std::span<const cplx> entries() const { return data_; }

  double norm() const;
  ComplexVector normalized() const;

 private:
  std::vector<cplx> data_;
};

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const ComplexVector& a, const ComplexVector& b);

ComplexVector operator*(cplx s, const ComplexVector& v);
ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const cplx> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; the left factor indexes the most significant block.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// |v><v| for a unit vector.
ComplexMatrix outer(const ComplexVector& v);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);
double hermiticity_defect(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

struct EigenSystem {
  std::vector<double> values;          // descending
  std::vector<ComplexVector> vectors;  // orthonormal, same order as values
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is symmetrized as (h + h^dagger)/2 after checking that it is
/// Hermitian to within `hermitian_tol`. Eigenvectors are phase-fixed so that
/// their largest-magnitude component is real and positive; within degenerate
/// clusters the choice of basis is otherwise arbitrary.
EigenSystem eig_hermitian(const ComplexMatrix& h, double hermitian_tol = 1e-8);

/// Sum_i values[i] |v_i><v_i|.
ComplexMatrix from_spectrum(std::span<const double> values, std::span<const ComplexVector> vectors);

/// Partial trace over every qubit not listed in `keep`. Qubit 0 is the most
/// significant bit. Kept qubits retain their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t nqubits, std::span<const std::size_t> keep);

std::size_t qubit_count_for_dim(std::size_t dim);

}  // namespace wtomo

#endif  // WTOMO_LINALG_HPP
