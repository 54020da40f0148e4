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

#include "wtomo/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include "wtomo/io.hpp"
#include "wtomo/mitigation.hpp"
#include "wtomo/qstate.hpp"
#include "wtomo/tomography.hpp"

namespace wtomo {

namespace {

constexpr std::uint64_t kStreamAB = 100;
constexpr std::uint64_t kStreamBC = 200;
constexpr std::uint64_t kStreamCalibration = 1000;
constexpr std::size_t kQubitsAB[] = {0, 1};
constexpr std::size_t kQubitsBC[] = {1, 2};

struct Measured {
  std::vector<ProbTable> tables;
  std::vector<CountsTable> counts;
};

Measured measure(const ExperimentConfig& cfg, const DensityMatrix& rho, const std::vector<MeasurementSetting>& settings,
                 const ReadoutModel& model, std::uint64_t seed, std::uint64_t stream_base) {
  Measured m;
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const ProbTable ideal = exact_probs(rho, settings[s]);
    if (cfg.exact) {
      m.tables.push_back(apply_readout_noise(ideal, model));
      continue;
    }
    const std::uint64_t sub = stream_seed(seed, stream_base + s);
    CountsTable c = cfg.per_shot_flips ? sample_shots_with_flips(ideal, model, cfg.shots, sub)
                                       : sample_shots(apply_readout_noise(ideal, model), cfg.shots, sub);
    m.tables.push_back(c.frequencies());
    m.counts.push_back(std::move(c));
  }
  return m;
}

std::vector<ProbTable> mitigated(const std::vector<ProbTable>& tables, std::span<const CalibrationMatrix> fs) {
  std::vector<ProbTable> out;
  out.reserve(tables.size());
  for (const ProbTable& t : tables) out.push_back(mitigate_probs(t, fs));
  return out;
}

template <class F>
void attempt(TrialBranch& branch, const char* stage, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    branch.errors.push_back(std::string(stage) + ": " + e.what());
  }
}

TrialBranch evaluate(const ExperimentConfig& cfg, int trial_id, bool mitigate, const Measured& full,
                     const Measured& ab, const Measured& bc, const std::vector<CalibrationMatrix>& fs) {
  TrialBranch b;
  b.mitigated = mitigate;
  b.report.trial_id = trial_id;
  b.report.shots = cfg.exact ? 0 : cfg.shots;
  b.report.mitigated = mitigate;
  const ComplexVector w = prepare_w();

  if (cfg.scheme != SchemeChoice::Parts2q) {
    attempt(b, "full", [&] {
      const std::vector<ProbTable> t = mitigate ? mitigated(full.tables, fs) : full.tables;
      b.rho_full = spectral_correct(reconstruct_3q(t));
      b.report.f_full = fidelity_pure(w, *b.rho_full);
    });
  }
  if (cfg.scheme != SchemeChoice::Full3q) {
    attempt(b, "parts", [&] {
      const std::vector<CalibrationMatrix> f_ab{fs[0], fs[1]};
      const std::vector<CalibrationMatrix> f_bc{fs[1], fs[2]};
      const std::vector<ProbTable> t_ab = mitigate ? mitigated(ab.tables, f_ab) : ab.tables;
      const std::vector<ProbTable> t_bc = mitigate ? mitigated(bc.tables, f_bc) : bc.tables;
      b.rho_ab = spectral_correct(reconstruct_2q(t_ab));
      b.rho_bc = spectral_correct(reconstruct_2q(t_bc));
      MarginalPair pair{*b.rho_ab, *b.rho_bc, cfg.eps_b};
      b.parts = diosi_reconstruct(pair);
      b.report.f_parts = fidelity_pure(w, DensityMatrix::from_pure(b.parts->psi));
      b.report.residual_ab = b.parts->residual_ab;
      b.report.residual_bc = b.parts->residual_bc;
    });
  }
  return b;
}

std::string fmt(const std::optional<double>& x) {
  if (!x) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", *x);
  return buf;
}

std::vector<std::string> qubit_names(const ReadoutModel& m) {
  std::vector<std::string> names;
  for (const QubitReadout& q : m.qubits) names.push_back(q.name);
  return names;
}

void write_branch(const std::filesystem::path& dir, const TrialBranch& b) {
  const std::string suffix = b.mitigated ? "mitigated" : "unmitigated";
  if (b.rho_full) io::write_json(dir / ("rho_full_" + suffix + ".json"), io::density_to_json(*b.rho_full));
  if (b.rho_ab) io::write_json(dir / ("rho_ab_" + suffix + ".json"), io::density_to_json(*b.rho_ab));
  if (b.rho_bc) io::write_json(dir / ("rho_bc_" + suffix + ".json"), io::density_to_json(*b.rho_bc));
  if (b.parts) io::write_json(dir / ("rho_parts_" + suffix + ".json"), io::reconstruction_to_json(*b.parts));
}

}  // namespace

std::string to_string(SchemeChoice s) {
  switch (s) {
    case SchemeChoice::Full3q: return "full3q";
    case SchemeChoice::Parts2q: return "parts2q";
    case SchemeChoice::Both: return "both";
  }
  return "?";
}

SchemeChoice scheme_from_string(const std::string& s) {
  if (s == "full3q") return SchemeChoice::Full3q;
  if (s == "parts2q") return SchemeChoice::Parts2q;
  if (s == "both") return SchemeChoice::Both;
  throw std::invalid_argument("unknown scheme '" + s + "' (expected full3q, parts2q or both)");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  if (noise.size() != 3) throw std::invalid_argument("noise model must cover exactly three qubits");
}

bool TrialResult::ok() const {
  return unmitigated.errors.empty() && (!mitigated || mitigated->errors.empty());
}

std::uint64_t trial_seed(std::uint64_t seed, int index) { return seed + static_cast<std::uint64_t>(index); }

TrialResult run_trial(const ExperimentConfig& cfg, int index) {
  cfg.validate();
  TrialResult r;
  r.trial_id = index + 1;
  r.seed = trial_seed(cfg.seed, index);

  const DensityMatrix rho = DensityMatrix::from_pure(prepare_w());
  const DensityMatrix rho_ab = partial_trace(rho, kQubitsAB);
  const DensityMatrix rho_bc = partial_trace(rho, kQubitsBC);

  r.calibration = cfg.exact ? cfg.noise.matrices()
                            : simulate_calibration(cfg.noise, cfg.shots, stream_seed(r.seed, kStreamCalibration));

  Measured full, ab, bc;
  if (cfg.scheme != SchemeChoice::Parts2q) {
    full = measure(cfg, rho, three_qubit_settings(), cfg.noise, r.seed, 0);
  }
  if (cfg.scheme != SchemeChoice::Full3q) {
    ab = measure(cfg, rho_ab, two_qubit_settings(), cfg.noise.select(kQubitsAB), r.seed, kStreamAB);
    bc = measure(cfg, rho_bc, two_qubit_settings(), cfg.noise.select(kQubitsBC), r.seed, kStreamBC);
  }

  r.unmitigated = evaluate(cfg, r.trial_id, false, full, ab, bc, r.calibration);
  if (cfg.mitigate) r.mitigated = evaluate(cfg, r.trial_id, true, full, ab, bc, r.calibration);
  r.counts_3q = std::move(full.counts);
  r.counts_ab = std::move(ab.counts);
  r.counts_bc = std::move(bc.counts);
  return r;
}

std::vector<TrialResult> run_pipeline(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::future<TrialResult>> jobs;
  for (int t = 0; t < cfg.trials; ++t) jobs.push_back(std::async(std::launch::async, run_trial, std::cref(cfg), t));
  std::vector<TrialResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string report_csv(const std::vector<TrialResult>& results) {
  std::ostringstream os;
  os << "trial,shots,f_full_unmitigated,f_full_mitigated,f_parts_unmitigated,f_parts_mitigated\n";
  for (const TrialResult& r : results) {
    const FidelityReport& u = r.unmitigated.report;
    const std::optional<double> ff = r.mitigated ? r.mitigated->report.f_full : std::nullopt;
    const std::optional<double> fp = r.mitigated ? r.mitigated->report.f_parts : std::nullopt;
    os << r.trial_id << ',' << u.shots << ',' << fmt(u.f_full) << ',' << fmt(ff) << ',' << fmt(u.f_parts) << ','
       << fmt(fp) << '\n';
  }
  return os.str();
}

std::string fidelities_csv(const std::vector<TrialResult>& results) {
  std::ostringstream os;
  os << "trial,shots,mitigated,f_full,f_parts\n";
  auto row = [&os](const FidelityReport& f) {
    os << f.trial_id << ',' << f.shots << ',' << (f.mitigated ? 1 : 0) << ',' << fmt(f.f_full) << ','
       << fmt(f.f_parts) << '\n';
  };
  for (const TrialResult& r : results) {
    row(r.unmitigated.report);
    if (r.mitigated) row(r.mitigated->report);
  }
  return os.str();
}

void write_outputs(const ExperimentConfig& cfg, const std::vector<TrialResult>& results,
                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "report.csv") << report_csv(results);
    std::ofstream(dir / "fidelities.csv") << fidelities_csv(results);
  }
  io::json meta = {
      {"seed", cfg.seed},
      {"generator", kGeneratorName},
      {"seed_derivation", "trial seed = seed + trial index; setting streams = splitmix64 mix of (trial seed, stream id)"},
      {"fidelity_convention", "sqrt(<W|rho|W>)"},
      {"config",
       {{"shots", cfg.shots},
        {"trials", cfg.trials},
        {"exact", cfg.exact},
        {"mitigate", cfg.mitigate},
        {"scheme", to_string(cfg.scheme)},
        {"per_shot_flips", cfg.per_shot_flips},
        {"eps_b", cfg.eps_b},
        {"noise", io::noise_to_json(cfg.noise)}}},
  };
  io::json trials = io::json::array();
  for (const TrialResult& r : results) {
    io::json errs = io::json::array();
    for (const std::string& e : r.unmitigated.errors) errs.push_back("unmitigated " + e);
    if (r.mitigated) {
      for (const std::string& e : r.mitigated->errors) errs.push_back("mitigated " + e);
    }
    trials.push_back({{"trial", r.trial_id}, {"seed", r.seed}, {"errors", errs}});
  }
  meta["trials"] = trials;
  io::write_json(dir / "metadata.json", meta);

  const std::vector<std::string> names = qubit_names(cfg.noise);
  for (const TrialResult& r : results) {
    const std::filesystem::path td = dir / ("trial_" + std::to_string(r.trial_id));
    std::filesystem::create_directories(td);
    io::write_json(td / "calibration.json", io::calibration_to_json(r.calibration, names));
    auto counts_file = [&](const std::vector<CountsTable>& tables, std::span<const std::size_t> which) {
      return io::counts_to_json({tables, cfg.shots, r.seed, cfg.noise.select(which)});
    };
    constexpr std::size_t kAll[] = {0, 1, 2};
    if (!r.counts_3q.empty()) io::write_json(td / "counts_3q.json", counts_file(r.counts_3q, kAll));
    if (!r.counts_ab.empty()) io::write_json(td / "counts_ab.json", counts_file(r.counts_ab, kQubitsAB));
    if (!r.counts_bc.empty()) io::write_json(td / "counts_bc.json", counts_file(r.counts_bc, kQubitsBC));
    write_branch(td, r.unmitigated);
    if (r.mitigated) write_branch(td, *r.mitigated);
  }
}

}  // namespace wtomo
