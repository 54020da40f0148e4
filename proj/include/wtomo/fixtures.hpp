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

#ifndef WTOMO_FIXTURES_HPP
#define WTOMO_FIXTURES_HPP

// Regression check against a set of printed experimental matrices: two
// two-qubit marginals, the three-qubit state rebuilt from them, and a
// three-qubit estimate from full tomography.

#include <filesystem>
#include <string>

#include "wtomo/linalg.hpp"
#include "wtomo/wholeparts.hpp"

namespace wtomo {

struct FixtureTolerances {
  double entrywise = 0.02;        // printed precision
  double fidelity_target = 0.995;
  double fidelity_window = 0.01;
};

struct FixtureReport {
  ReconstructionResult parts;
  /// Largest entrywise gap between |psi><psi| and the printed rebuilt state.
  double max_entry_error_direct = 0.0;
  /// Same, against the complex conjugate of |psi><psi|. The printed rebuilt
  /// state carries the opposite sign convention for imaginary parts from the
  /// printed marginals (its own partial traces are the conjugates of them),
  /// so this is the layout that can agree.
  double max_entry_error_conjugate = 0.0;
  /// min of the two errors above.
  double max_entry_error = 0.0;
  bool conjugate_layout = false;
  /// sqrt(<W|psi psi^dagger|W>) for the rebuilt state.
  double fidelity_parts = 0.0;
  /// sqrt(<W|M|W>) of the printed rebuilt state, as printed.
  double fidelity_parts_printed = 0.0;
  /// Same quantity for the printed full-tomography estimate (Hermitian part,
  /// not renormalized). Informational only.
  double fidelity_full_printed = 0.0;
  double trace_full_printed = 0.0;
  double hermiticity_defect_full_printed = 0.0;
  bool entries_ok = false;
  bool fidelity_ok = false;

  bool ok() const { return entries_ok && fidelity_ok; }
};

/// Expects rho_ab_expt.json, rho_bc_expt.json, rho_parts_expt.json and
/// rho_full_expt.json in `dir`. The marginals are rescaled to unit trace
/// before use.
FixtureReport check_fixtures(const std::filesystem::path& dir, const FixtureTolerances& tol = {});

}  // namespace wtomo

#endif  // WTOMO_FIXTURES_HPP
