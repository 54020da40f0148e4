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

#include "wtomo/fixtures.hpp"

#include <algorithm>
#include <cmath>

#include "wtomo/io.hpp"
#include "wtomo/qstate.hpp"

namespace wtomo {

namespace {

// <w|m|w> for a possibly unphysical printed matrix, using its Hermitian part.
double w_expectation(const ComplexMatrix& m, const ComplexVector& w) {
  const ComplexMatrix h = cplx(0.5) * (m + m.adjoint());
  return inner(w, h * w).real();
}

}  // namespace

FixtureReport check_fixtures(const std::filesystem::path& dir, const FixtureTolerances& tol) {
  const DensityMatrix rho_ab = io::density_from_json(io::read_json(dir / "rho_ab_expt.json"), true);
  const DensityMatrix rho_bc = io::density_from_json(io::read_json(dir / "rho_bc_expt.json"), true);
  const ComplexMatrix printed_parts = io::matrix_from_json(io::read_json(dir / "rho_parts_expt.json"));
  const ComplexMatrix printed_full = io::matrix_from_json(io::read_json(dir / "rho_full_expt.json"));
  if (printed_parts.rows() != 8 || printed_full.rows() != 8) {
    throw DimensionError("fixtures: three-qubit matrices must be 8x8");
  }

  // Experimental marginals: rho_B estimates agree only to a few percent.
  constexpr double kExperimentalEpsB = 0.05;
  FixtureReport r;
  r.parts = diosi_reconstruct(MarginalPair{rho_ab, rho_bc, kExperimentalEpsB});
  const ComplexVector w = w_closed_form();
  const ComplexMatrix rebuilt = outer(r.parts.psi);
  ComplexMatrix rebuilt_conj = rebuilt;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) rebuilt_conj(i, j) = std::conj(rebuilt(i, j));
  }
  r.max_entry_error_direct = max_abs_diff(rebuilt, printed_parts);
  r.max_entry_error_conjugate = max_abs_diff(rebuilt_conj, printed_parts);
  r.conjugate_layout = r.max_entry_error_conjugate < r.max_entry_error_direct;
  r.max_entry_error = std::min(r.max_entry_error_direct, r.max_entry_error_conjugate);
  r.fidelity_parts = std::abs(inner(w, r.parts.psi));
  r.fidelity_parts_printed = std::sqrt(std::max(0.0, w_expectation(printed_parts, w)));
  r.fidelity_full_printed = std::sqrt(std::max(0.0, w_expectation(printed_full, w)));
  r.trace_full_printed = printed_full.trace().real();
  r.hermiticity_defect_full_printed = hermiticity_defect(printed_full);
  r.entries_ok = r.max_entry_error <= tol.entrywise;
  r.fidelity_ok = std::abs(r.fidelity_parts - tol.fidelity_target) <= tol.fidelity_window;
  return r;
}

}  // namespace wtomo
