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

#include "wtomo/wholeparts.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace wtomo {

namespace {

constexpr std::size_t kA[] = {0};
constexpr std::size_t kB[] = {1};

// Keeps the two leading eigenpairs of a two-qubit marginal and reports the
// discarded eigenvalue mass.
struct TopTwo {
  std::array<ComplexVector, 2> vectors;
  double truncated = 0.0;
  double kept = 0.0;
};

TopTwo top_two(const DensityMatrix& rho, const char* name) {
  const EigenSystem es = eig_hermitian(rho.mat());
  TopTwo t;
  t.vectors = {es.vectors[0], es.vectors[1]};
  t.kept = es.values[0] + es.values[1];
  for (std::size_t k = 2; k < es.values.size(); ++k) t.truncated += std::abs(es.values[k]);
  if (t.kept < 0.8) {
    throw TooMixedError(std::string(name) + ": only " + std::to_string(t.kept) +
                        " of the eigenvalue mass lies in the leading two eigenvalues");
  }
  return t;
}

// Single-qubit spectrum clamped at zero and rescaled to unit sum.
std::array<double, 2> qubit_spectrum(const EigenSystem& es) {
  std::array<double, 2> l{std::max(es.values[0], 0.0), std::max(es.values[1], 0.0)};
  const double s = l[0] + l[1];
  return {l[0] / s, l[1] / s};
}

std::size_t permute_index(std::size_t x, std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::size_t y = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((x >> (n - 1 - q)) & 1U) y |= std::size_t{1} << (n - 1 - perm[q]);
  }
  return y;
}

void check_perm(std::span<const std::size_t> perm) {
  std::vector<std::size_t> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("permute_qubits: not a permutation");
  }
}

}  // namespace

SinglePartyMarginals single_party_marginals(const MarginalPair& pair) {
  if (pair.rho_ab.nqubits() != 2 || pair.rho_bc.nqubits() != 2) {
    throw DimensionError("single_party_marginals: both marginals must be two-qubit states");
  }
  const DensityMatrix b_from_ab = partial_trace(pair.rho_ab, kB);
  const DensityMatrix b_from_bc = partial_trace(pair.rho_bc, kA);
  const double disc = max_abs_diff(b_from_ab, b_from_bc);
  if (disc > pair.eps_b) {
    throw InconsistentMarginalsError("marginals disagree on rho_B by " + std::to_string(disc) + " (tolerance " +
                                     std::to_string(pair.eps_b) + ")");
  }
  return {partial_trace(pair.rho_ab, kA), DensityMatrix(cplx(0.5) * (b_from_ab.mat() + b_from_bc.mat())),
          partial_trace(pair.rho_bc, kB), disc};
}

OverlapTensors purify_structures(const MarginalPair& pair) {
  const SinglePartyMarginals m = single_party_marginals(pair);
  const EigenSystem es_a = eig_hermitian(m.rho_a.mat());
  const EigenSystem es_b = eig_hermitian(m.rho_b.mat());
  const EigenSystem es_c = eig_hermitian(m.rho_c.mat());
  const TopTwo bc = top_two(pair.rho_bc, "rho_BC");
  const TopTwo ab = top_two(pair.rho_ab, "rho_AB");

  OverlapTensors t;
  t.lambda_a = qubit_spectrum(es_a);
  t.lambda_c = qubit_spectrum(es_c);
  for (std::size_t i = 0; i < 2; ++i) {
    t.basis_a[i] = es_a.vectors[i];
    t.basis_b[i] = es_b.vectors[i];
    t.basis_c[i] = es_c.vectors[i];
  }
  t.vecs_bc = bc.vectors;
  t.vecs_ab = ab.vectors;
  t.truncated_bc = bc.truncated;
  t.truncated_ab = ab.truncated;

  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        t.a_tensor[i][j][k] = inner(kron(t.basis_b[j], t.basis_c[k]), t.vecs_bc[i]);
        t.c_tensor[k][i][j] = inner(kron(t.basis_a[i], t.basis_b[j]), t.vecs_ab[k]);
      }
    }
  }
  return t;
}

PhaseSolution solve_phases(const OverlapTensors& t, double degeneracy_gap) {
  const double gap = std::abs(t.lambda_a[0] - t.lambda_a[1]);
  if (gap <= degeneracy_gap) {
    throw AmbiguousPhaseError("rho_A spectrum is degenerate (gap " + std::to_string(gap) +
                              "); the state is not fixed by these marginals");
  }

  // a_ijk and c_ijk as in the overlap equation
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) { return std::sqrt(t.lambda_a[i]) * t.a_tensor[i][j][k]; };
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return std::sqrt(t.lambda_c[k]) * t.c_tensor[k][i][j]; };

  // m[i][k] = sum_j c_ijk conj(a_ijk) = |..| e^{i (alpha_i - gamma_k)}
  std::array<std::array<cplx, 2>, 2> m{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t j = 0; j < 2; ++j) m[i][k] += c(i, j, k) * std::conj(a(i, j, k));
    }
  }

  constexpr double kWeak = 1e-8;
  constexpr double kNegligibleWeight = 1e-12;
  for (std::size_t i = 0; i < 2; ++i) {
    if (t.lambda_a[i] > kNegligibleWeight && std::max(std::abs(m[i][0]), std::abs(m[i][1])) < kWeak) {
      throw AmbiguousPhaseError("phase alpha_" + std::to_string(i) + " is not constrained by the overlaps");
    }
  }

  // Grow a maximum-weight spanning tree from gamma_0 = 0: each step fixes one
  // new phase through the strongest edge reaching it from a fixed one, so a
  // near-zero overlap never sets a phase that a strong one could.
  std::array<std::optional<double>, 2> alpha{};
  std::array<std::optional<double>, 2> gamma{0.0, std::nullopt};
  for (;;) {
    double best = 0.0;
    std::size_t bi = 0;
    std::size_t bk = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        const bool frontier = alpha[i].has_value() != gamma[k].has_value();
        if (frontier && std::abs(m[i][k]) >= kWeak && std::abs(m[i][k]) > best) {
          best = std::abs(m[i][k]);
          bi = i;
          bk = k;
        }
      }
    }
    if (best == 0.0) break;
    const double diff = std::arg(m[bi][bk]);
    if (gamma[bk]) {
      alpha[bi] = diff + *gamma[bk];
    } else {
      gamma[bk] = *alpha[bi] - diff;
    }
  }

  PhaseSolution sol;
  sol.gamma = {0.0, gamma[1].value_or(0.0)};
  for (std::size_t i = 0; i < 2; ++i) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < 2; ++k) acc += std::polar(1.0, sol.gamma[k]) * m[i][k];
    sol.alpha[i] = std::abs(acc) > 0.0 ? std::arg(acc) : alpha[i].value_or(0.0);
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        const cplx lhs = std::polar(1.0, sol.alpha[i]) * a(i, j, k);
        const cplx rhs = std::polar(1.0, sol.gamma[k]) * c(i, j, k);
        sol.residual = std::max(sol.residual, std::abs(lhs - rhs));
      }
    }
  }
  return sol;
}

ReconstructionResult diosi_reconstruct(const MarginalPair& pair, double degeneracy_gap) {
  const OverlapTensors t = purify_structures(pair);
  const PhaseSolution phases = solve_phases(t, degeneracy_gap);

  ComplexVector psi(8);
  for (std::size_t i = 0; i < 2; ++i) {
    const cplx w = std::polar(std::sqrt(t.lambda_a[i]), phases.alpha[i]);
    psi = psi + w * kron(t.basis_a[i], t.vecs_bc[i]);
  }
  psi = psi.normalized();

  std::size_t pivot = 0;
  for (std::size_t x = 1; x < psi.dim(); ++x) {
    if (std::abs(psi[x]) > std::abs(psi[pivot]) + 1e-12) pivot = x;
  }
  psi = (std::abs(psi[pivot]) / psi[pivot]) * psi;
  psi[pivot] = psi[pivot].real();

  ReconstructionResult r;
  r.psi = psi;
  r.phases = phases;
  const DensityMatrix whole = DensityMatrix::from_pure(psi);
  constexpr std::size_t kAB[] = {0, 1};
  constexpr std::size_t kBC[] = {1, 2};
  r.residual_ab = max_abs_diff(partial_trace(whole, kAB), pair.rho_ab);
  r.residual_bc = max_abs_diff(partial_trace(whole, kBC), pair.rho_bc);
  r.truncated_ab = t.truncated_ab;
  r.truncated_bc = t.truncated_bc;
  r.b_discrepancy = max_abs_diff(partial_trace(pair.rho_ab, kB), partial_trace(pair.rho_bc, kA));
  return r;
}

ComplexVector permute_qubits(const ComplexVector& psi, const std::array<std::size_t, 3>& perm) {
  if (psi.dim() != 8) throw DimensionError("permute_qubits: expected a three-qubit vector");
  check_perm(perm);
  ComplexVector out(8);
  for (std::size_t x = 0; x < 8; ++x) out[x] = psi[permute_index(x, perm)];
  return out;
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const std::size_t> perm) {
  if (perm.size() != rho.nqubits()) throw DimensionError("permute_qubits: permutation size mismatch");
  check_perm(perm);
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) out(r, c) = rho(permute_index(r, perm), permute_index(c, perm));
  }
  return DensityMatrix(std::move(out));
}

}  // namespace wtomo
