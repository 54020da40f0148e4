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

// wtomo: simulated W-state tomography, readout mitigation and whole-from-parts
// reconstruction from the command line.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wtomo/fixtures.hpp"
#include "wtomo/io.hpp"
#include "wtomo/metrics.hpp"
#include "wtomo/mitigation.hpp"
#include "wtomo/pipeline.hpp"
#include "wtomo/qstate.hpp"
#include "wtomo/tomography.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitFixture = 2;
constexpr int kExitReconstruction = 3;

// Failures inside the numerical core map to exit code 3; everything else
// (missing files, malformed JSON) to 1.
struct ReconstructionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto numeric(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw ReconstructionFailure(e.what());
  }
}

wtomo::ReadoutModel load_noise(const std::string& spec) {
  if (spec == "device") return wtomo::ReadoutModel::device();
  if (spec == "none") return wtomo::ReadoutModel::noiseless(3);
  return wtomo::io::noise_from_json(wtomo::io::read_json(spec));
}

void emit(const wtomo::io::json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    wtomo::io::write_json(out, j);
  }
}

std::vector<wtomo::ProbTable> frequencies(const wtomo::io::CountsFile& f) {
  std::vector<wtomo::ProbTable> t;
  for (const wtomo::CountsTable& c : f.tables) t.push_back(c.frequencies());
  return t;
}

// Reconstructs from a counts file, optionally mitigating with the listed
// calibration entries, and writes the density matrix.
int tomography(const std::string& counts_path, const std::string& calib_path,
               const std::vector<std::string>& names, bool raw, const std::string& out, bool three) {
  const wtomo::io::CountsFile counts = wtomo::io::counts_from_json(wtomo::io::read_json(counts_path));
  std::vector<wtomo::ProbTable> tables = frequencies(counts);
  std::vector<wtomo::CalibrationMatrix> fs;
  if (!calib_path.empty()) fs = wtomo::io::calibration_from_json(wtomo::io::read_json(calib_path), names);
  const wtomo::DensityMatrix rho = numeric([&] {
    if (!fs.empty()) {
      for (wtomo::ProbTable& t : tables) t = wtomo::mitigate_probs(t, fs);
    }
    const wtomo::DensityMatrix est = three ? wtomo::reconstruct_3q(tables) : wtomo::reconstruct_2q(tables);
    return raw ? est : wtomo::spectral_correct(est);
  });
  emit(wtomo::io::density_to_json(rho), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit W-state tomography: full 17-setting scheme versus reconstruction from two-qubit parts"};
  app.require_subcommand(1);

  // pipeline
  wtomo::ExperimentConfig cfg;
  std::string noise_spec = "device";
  std::string scheme = "both";
  std::string out_dir = "wtomo_out";
  auto* pipeline = app.add_subcommand("pipeline", "Simulate calibration, tomography and reconstruction over several trials");
  pipeline->add_option("--shots", cfg.shots, "Shots per circuit, calibration circuits included")
      ->check(CLI::PositiveNumber)->capture_default_str();
  pipeline->add_option("--trials", cfg.trials, "Number of independent trials")
      ->check(CLI::PositiveNumber)->capture_default_str();
  pipeline->add_option("--seed", cfg.seed, "Base seed; trial t uses seed + t")->capture_default_str();
  pipeline->add_option("--noise", noise_spec, "Readout model: 'device', 'none' or a JSON file")->capture_default_str();
  pipeline->add_flag("--mitigate,!--no-mitigate", cfg.mitigate, "Also report readout-mitigated fidelities")
      ->capture_default_str();
  pipeline->add_flag("--exact", cfg.exact, "Use exact probabilities instead of sampling");
  pipeline->add_flag("--per-shot-flips", cfg.per_shot_flips, "Draw readout flips shot by shot");
  pipeline->add_option("--scheme", scheme, "full3q, parts2q or both")
      ->check(CLI::IsMember({"full3q", "parts2q", "both"}))->capture_default_str();
  pipeline->add_option("--eps-b", cfg.eps_b, "Allowed disagreement between the two rho_B estimates")
      ->capture_default_str();
  pipeline->add_option("--out", out_dir, "Output directory")->capture_default_str();

  // fixtures
  std::string fixture_dir = WTOMO_FIXTURE_DIR;
  auto* fixtures = app.add_subcommand("fixtures", "Check reconstruction against the bundled printed matrices");
  fixtures->add_option("--dir", fixture_dir, "Fixture directory")->check(CLI::ExistingDirectory)->capture_default_str();

  // tomo3q / tomo2q
  std::string counts_path, calib_path, tomo_out;
  std::string pair = "AB";
  std::vector<std::string> names{"A", "B", "C"};
  bool raw = false;
  auto* tomo3q = app.add_subcommand("tomo3q", "Reconstruct a three-qubit state from 17-setting counts");
  auto* tomo2q = app.add_subcommand("tomo2q", "Reconstruct a two-qubit state from 7-setting counts");
  for (CLI::App* sub : {tomo3q, tomo2q}) {
    sub->add_option("counts", counts_path, "Counts JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--calibration", calib_path, "Calibration JSON; enables readout mitigation")
        ->check(CLI::ExistingFile);
    sub->add_option("--names", names, "Qubit names in the calibration file, register order")
        ->delimiter(',')->capture_default_str();
    sub->add_flag("--raw", raw, "Skip the positivity correction");
    sub->add_option("--out", tomo_out, "Output JSON (default stdout)");
  }
  tomo2q->add_option("--qubits", pair, "Which pair the counts belong to")
      ->check(CLI::IsMember({"AB", "BC"}))->capture_default_str();

  // diosi
  std::string ab_path, bc_path, diosi_out;
  double eps_b = 0.05;
  double gap = wtomo::kDegeneracyGap;
  auto* diosi = app.add_subcommand("diosi", "Rebuild a pure three-qubit state from rho_AB and rho_BC");
  diosi->add_option("rho_ab", ab_path, "rho_AB JSON")->required()->check(CLI::ExistingFile);
  diosi->add_option("rho_bc", bc_path, "rho_BC JSON")->required()->check(CLI::ExistingFile);
  diosi->add_option("--eps-b", eps_b, "Allowed disagreement between the two rho_B estimates")->capture_default_str();
  diosi->add_option("--gap", gap, "Minimal eigenvalue gap of rho_A")->capture_default_str();
  diosi->add_option("--out", diosi_out, "Output JSON (default stdout)");

  // fidelity
  std::string rho_path, target = "w";
  bool renormalize = false;
  auto* fidelity = app.add_subcommand("fidelity", "sqrt(<psi|rho|psi>) against a W or GHZ target");
  fidelity->add_option("rho", rho_path, "Three-qubit density matrix JSON")->required()->check(CLI::ExistingFile);
  fidelity->add_option("--target", target, "w or ghz")->check(CLI::IsMember({"w", "ghz"}))->capture_default_str();
  fidelity->add_flag("--renormalize", renormalize, "Rescale the input to unit trace first");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pipeline) {
      cfg.noise = load_noise(noise_spec);
      cfg.scheme = wtomo::scheme_from_string(scheme);
      cfg.validate();
      const std::vector<wtomo::TrialResult> results = wtomo::run_pipeline(cfg);
      wtomo::write_outputs(cfg, results, out_dir);
      std::cout << wtomo::report_csv(results);
      int code = kExitOk;
      for (const wtomo::TrialResult& r : results) {
        std::vector<std::string> errs = r.unmitigated.errors;
        if (r.mitigated) errs.insert(errs.end(), r.mitigated->errors.begin(), r.mitigated->errors.end());
        for (const std::string& e : errs) {
          std::cerr << "trial " << r.trial_id << ": " << e << '\n';
          code = kExitReconstruction;
        }
      }
      return code;
    }
    if (*fixtures) {
      const wtomo::FixtureReport r = numeric([&] { return wtomo::check_fixtures(fixture_dir); });
      std::printf("rebuilt vs printed state, max entry error  %.4f  (limit 0.02)  %s\n", r.max_entry_error,
                  r.entries_ok ? "ok" : "FAIL");
      std::printf("  as stored %.4f, complex conjugate %.4f; printed layout matches the %s\n",
                  r.max_entry_error_direct, r.max_entry_error_conjugate,
                  r.conjugate_layout ? "conjugate" : "stored form");
      std::printf("fidelity of rebuilt state vs W            %.4f  (0.995 +- 0.01)  %s\n", r.fidelity_parts,
                  r.fidelity_ok ? "ok" : "FAIL");
      std::printf("fidelity of printed rebuilt state vs W    %.4f\n", r.fidelity_parts_printed);
      std::printf("fidelity of printed full estimate vs W    %.4f  (trace %.3f, hermiticity defect %.3f; informational)\n",
                  r.fidelity_full_printed, r.trace_full_printed, r.hermiticity_defect_full_printed);
      return r.ok() ? kExitOk : kExitFixture;
    }
    if (*tomo3q) return tomography(counts_path, calib_path, names, raw, tomo_out, true);
    if (*tomo2q) {
      if (names.size() != 3) throw std::invalid_argument("--names needs three entries");
      const std::size_t first = pair == "AB" ? 0 : 1;
      return tomography(counts_path, calib_path, {names[first], names[first + 1]}, raw, tomo_out, false);
    }
    if (*diosi) {
      const wtomo::DensityMatrix ab = wtomo::io::density_from_json(wtomo::io::read_json(ab_path), true);
      const wtomo::DensityMatrix bc = wtomo::io::density_from_json(wtomo::io::read_json(bc_path), true);
      const wtomo::ReconstructionResult r = numeric([&] {
        return wtomo::diosi_reconstruct(wtomo::MarginalPair{ab, bc, eps_b}, gap);
      });
      emit(wtomo::io::reconstruction_to_json(r), diosi_out);
      return kExitOk;
    }
    if (*fidelity) {
      const wtomo::DensityMatrix rho = wtomo::io::density_from_json(wtomo::io::read_json(rho_path), renormalize);
      const wtomo::ComplexVector psi = target == "w" ? wtomo::w_closed_form() : wtomo::ghz_state();
      const double f = numeric([&] { return wtomo::fidelity_pure(psi, rho); });
      std::printf("%.10f\n", f);
      return kExitOk;
    }
  } catch (const ReconstructionFailure& e) {
    std::cerr << "wtomo: " << e.what() << '\n';
    return kExitReconstruction;
  } catch (const std::exception& e) {
    std::cerr << "wtomo: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
