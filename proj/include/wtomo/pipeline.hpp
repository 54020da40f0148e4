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

#ifndef WTOMO_PIPELINE_HPP
#define WTOMO_PIPELINE_HPP

// End-to-end simulated experiment: per trial, calibrate readout, measure the
// 17 three-qubit settings and the 7 two-qubit settings on each of AB and BC,
// optionally mitigate, reconstruct, correct positivity, rebuild the whole
// state from the two marginals and score both estimates against |W>.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wtomo/calibration.hpp"
#include "wtomo/density.hpp"
#include "wtomo/metrics.hpp"
#include "wtomo/noisesim.hpp"
#include "wtomo/wholeparts.hpp"

namespace wtomo {

enum class SchemeChoice { Full3q, Parts2q, Both };

std::string to_string(SchemeChoice s);
SchemeChoice scheme_from_string(const std::string& s);

struct ExperimentConfig {
  std::uint64_t shots = 20000;  // per circuit, also used for each calibration circuit
  int trials = 5;
  std::uint64_t seed = 20240501;
  ReadoutModel noise = ReadoutModel::device();
  bool mitigate = true;
  SchemeChoice scheme = SchemeChoice::Both;
  /// Analytic probabilities, no sampling; calibration uses the true matrices.
  bool exact = false;
  /// Sample readout flips shot by shot instead of pre-applying the confusion.
  bool per_shot_flips = false;
  /// Fed to the marginal consistency check of the whole-from-parts step.
  double eps_b = 0.05;

  void validate() const;
};

/// Reconstructions for one trial under one mitigation mode.
struct TrialBranch {
  bool mitigated = false;
  std::optional<DensityMatrix> rho_full;
  std::optional<DensityMatrix> rho_ab;
  std::optional<DensityMatrix> rho_bc;
  std::optional<ReconstructionResult> parts;
  FidelityReport report;
  std::vector<std::string> errors;
};

struct TrialResult {
  int trial_id = 0;  // 1-based
  std::uint64_t seed = 0;
  std::vector<CalibrationMatrix> calibration;
  std::vector<CountsTable> counts_3q, counts_ab, counts_bc;  // empty in exact mode
  TrialBranch unmitigated;
  std::optional<TrialBranch> mitigated;

  bool ok() const;
};

/// Seed of trial `index` (0-based).
std::uint64_t trial_seed(std::uint64_t seed, int index);

TrialResult run_trial(const ExperimentConfig& cfg, int index);

/// Runs every trial (concurrently) and returns them ordered by trial id.
std::vector<TrialResult> run_pipeline(const ExperimentConfig& cfg);

/// Wide report: trial,shots,f_full_unmitigated,f_full_mitigated,
/// f_parts_unmitigated,f_parts_mitigated.
std::string report_csv(const std::vector<TrialResult>& results);
/// One FidelityReport per row: trial,shots,mitigated,f_full,f_parts.
std::string fidelities_csv(const std::vector<TrialResult>& results);

/// report.csv, fidelities.csv, metadata.json and trial_<n>/ directories with
/// counts, calibration and matrix JSON files.
void write_outputs(const ExperimentConfig& cfg, const std::vector<TrialResult>& results,
                   const std::filesystem::path& dir);

}  // namespace wtomo

#endif  // WTOMO_PIPELINE_HPP
