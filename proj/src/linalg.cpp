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

#include "wtomo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wtomo {

namespace {

void require_finite(std::span<const cplx> xs, const char* what) {
  for (const cplx& x : xs) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::vector<cplx> data) : data_(std::move(data)) {
  require_finite(data_, "ComplexVector");
}

ComplexVector::ComplexVector(std::initializer_list<cplx> init) : data_(init) {
  require_finite(data_, "ComplexVector");
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const cplx& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  return cplx(1.0 / n) * *this;
}

cplx inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexVector operator*(cplx s, const ComplexVector& v) {
  ComplexVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return out;
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("vector sum: dimension mismatch");
  ComplexVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw DimensionError("ComplexMatrix: entry count != rows*cols");
  require_finite(data_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!square()) throw DimensionError("trace of a non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.cols() != v.dim()) throw DimensionError("matrix-vector product: dimension mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx x = a(ar, ac);
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("outer: zero vector");
  if (std::abs(n - 1.0) > 1e-10) throw std::invalid_argument("outer: vector is not normalized");
  ComplexMatrix out(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) out(i, j) = v[i] * std::conj(v[j]);
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& x : a.entries()) m = std::max(m, std::abs(x));
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.square()) throw DimensionError("hermiticity_defect: non-square matrix");
  return max_abs_diff(a, a.adjoint());
}

bool all_finite(const ComplexMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) s += std::norm(a(r, c));
    }
  }
  return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const cplx& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

// Applies the unitary J acting on coordinates (p, q),
//   J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]  (rows p,q; columns p,q),
// as a <- J^dagger a J and v <- v J. This zeroes a(p, q) when
// a(p, q) = |a(p, q)| e^{i phi} and (c, s) solve the real 2x2 problem.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx jpp = c;
  const cplx jpq = s;
  const cplx jqp = -s * std::conj(phase);
  const cplx jqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  // a <- a J (columns p, q)
  for (std::size_t r = 0; r < n; ++r) {
    const cplx arp = a(r, p);
    const cplx arq = a(r, q);
    a(r, p) = arp * jpp + arq * jqp;
    a(r, q) = arp * jpq + arq * jqq;
  }
  // a <- J^dagger a (rows p, q)
  for (std::size_t col = 0; col < n; ++col) {
    const cplx apc = a(p, col);
    const cplx aqc = a(q, col);
    a(p, col) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
    a(q, col) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  // v <- v J
  for (std::size_t r = 0; r < n; ++r) {
    const cplx vrp = v(r, p);
    const cplx vrq = v(r, q);
    v(r, p) = vrp * jpp + vrq * jqp;
    v(r, q) = vrp * jpq + vrq * jqq;
  }
}

ComplexVector phase_fixed_column(const ComplexMatrix& v, std::size_t col) {
  const std::size_t n = v.rows();
  double best = 0.0;
  for (std::size_t r = 0; r < n; ++r) best = std::max(best, std::abs(v(r, col)));
  // first component within rounding of the maximum, so ties are resolved by index
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (std::abs(v(r, col)) >= best - 1e-12) {
      pivot = r;
      break;
    }
  }
  const cplx ref = v(pivot, col);
  const cplx rot = std::conj(ref) / std::abs(ref);
  ComplexVector out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = v(r, col) * rot;
  out[pivot] = std::abs(ref);
  return out;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& h, double hermitian_tol) {
  if (!h.square()) throw DimensionError("eig_hermitian: matrix is not square");
  if (!all_finite(h)) throw std::invalid_argument("eig_hermitian: non-finite entry");
  const double defect = hermiticity_defect(h);
  if (defect > hermitian_tol) {
    throw NotHermitianError("eig_hermitian: |h - h^dagger|_max = " + std::to_string(defect));
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = cplx(0.5) * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, frobenius_norm(a));
  int sweep = 0;
  while (off_diagonal_norm(a) > kOffDiagonalTol * scale) {
    if (++sweep > kMaxSweeps) {
      throw ConvergenceError("eig_hermitian: no convergence after " + std::to_string(kMaxSweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(off_diagonal_norm(a)) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem es;
  es.values.reserve(n);
  es.vectors.reserve(n);
  for (std::size_t idx : order) {
    es.values.push_back(a(idx, idx).real());
    es.vectors.push_back(phase_fixed_column(v, idx));
  }
  return es;
}

ComplexMatrix from_spectrum(std::span<const double> values, std::span<const ComplexVector> vectors) {
  if (values.size() != vectors.size() || vectors.empty()) throw DimensionError("from_spectrum: size mismatch");
  const std::size_t n = vectors.front().dim();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const ComplexVector& vk = vectors[k];
    if (vk.dim() != n) throw DimensionError("from_spectrum: ragged eigenvectors");
    if (values[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(i, j) += values[k] * vk[i] * std::conj(vk[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partial trace

std::size_t qubit_count_for_dim(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  return n;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t nqubits, std::span<const std::size_t> keep) {
  const std::size_t dim = std::size_t{1} << nqubits;
  if (rho.rows() != dim || rho.cols() != dim) throw DimensionError("partial_trace: matrix is not 2^n x 2^n");
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= nqubits) throw std::out_of_range("partial_trace: qubit index out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (keep[j] == keep[i]) throw std::invalid_argument("partial_trace: duplicate qubit index");
    }
  }
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < nqubits; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  const std::size_t nk = kept.size();
  const std::size_t nt = traced.size();
  // Scatter a sub-register index into the full register.
  auto place = [nqubits](std::span<const std::size_t> qubits, std::size_t sub) {
    std::size_t full = 0;
    const std::size_t m = qubits.size();
    for (std::size_t b = 0; b < m; ++b) {
      if ((sub >> (m - 1 - b)) & 1U) full |= std::size_t{1} << (nqubits - 1 - qubits[b]);
    }
    return full;
  };

  ComplexMatrix out(std::size_t{1} << nk, std::size_t{1} << nk);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const std::size_t rf = place(kept, r);
    for (std::size_t c = 0; c < out.cols(); ++c) {
      const std::size_t cf = place(kept, c);
      cplx s = 0.0;
      for (std::size_t t = 0; t < (std::size_t{1} << nt); ++t) {
        const std::size_t tf = place(traced, t);
        s += rho(rf | tf, cf | tf);
      }
      out(r, c) = s;
    }
  }
  return out;
}

}  // namespace wtomo
