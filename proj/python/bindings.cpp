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

// Python bindings. Matrices and vectors cross the boundary as complex128
// NumPy arrays; probability tables as {label: float64 array} dicts.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "wtomo/metrics.hpp"
#include "wtomo/mitigation.hpp"
#include "wtomo/noisesim.hpp"
#include "wtomo/pipeline.hpp"
#include "wtomo/qstate.hpp"
#include "wtomo/tomography.hpp"
#include "wtomo/wholeparts.hpp"

namespace py = pybind11;
using namespace wtomo;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return ComplexMatrix(rows, cols, std::vector<cplx>(a.data(), a.data() + rows * cols));
}

DensityMatrix to_density(const CArray& a) { return DensityMatrix(to_matrix(a)); }

ComplexVector to_vector(const CArray& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
  return ComplexVector(std::vector<cplx>(a.data(), a.data() + a.shape(0)));
}

CArray from_matrix(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

CArray from_vector(const ComplexVector& v) {
  CArray out(static_cast<py::ssize_t>(v.dim()));
  std::copy(v.entries().begin(), v.entries().end(), out.mutable_data());
  return out;
}

RArray from_probs(const ProbTable& p) {
  RArray out(static_cast<py::ssize_t>(p.probs.size()));
  std::copy(p.probs.begin(), p.probs.end(), out.mutable_data());
  return out;
}

ProbTable to_probs(const std::string& label, const RArray& a) {
  const MeasurementSetting s = parse_setting(label);
  if (a.ndim() != 1 || static_cast<std::size_t>(a.shape(0)) != (std::size_t{1} << s.nqubits)) {
    throw std::invalid_argument("probabilities for '" + label + "' have the wrong length");
  }
  return {label, s.nqubits, std::vector<double>(a.data(), a.data() + a.shape(0))};
}

std::vector<ProbTable> to_tables(const std::map<std::string, RArray>& d) {
  std::vector<ProbTable> out;
  for (const auto& [label, a] : d) out.push_back(to_probs(label, a));
  return out;
}

ReadoutModel to_model(const std::vector<std::pair<double, double>>& errors) {
  ReadoutModel m;
  const char* names = "ABCDEFGH";
  for (std::size_t q = 0; q < errors.size(); ++q) {
    m.qubits.push_back({std::string(1, names[q % 8]), errors[q].first, errors[q].second});
  }
  return m;
}

std::vector<CalibrationMatrix> to_calibration(const std::vector<RArray>& fs) {
  std::vector<CalibrationMatrix> out;
  for (const RArray& a : fs) {
    if (a.ndim() != 2 || a.shape(0) != 2 || a.shape(1) != 2) throw std::invalid_argument("calibration must be 2x2");
    CalibrationMatrix f;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) f.f[r][c] = a.at(r, c);
    }
    out.push_back(f);
  }
  return out;
}

std::vector<std::string> labels(const std::vector<MeasurementSetting>& settings) {
  std::vector<std::string> out;
  for (const MeasurementSetting& s : settings) out.push_back(s.label);
  return out;
}

py::object opt(const std::optional<double>& x) { return x ? py::cast(*x) : py::none(); }

py::dict branch_dict(const TrialBranch& b) {
  py::dict d;
  d["f_full"] = opt(b.report.f_full);
  d["f_parts"] = opt(b.report.f_parts);
  d["rho_full"] = b.rho_full ? py::object(from_matrix(b.rho_full->mat())) : py::none();
  d["psi_parts"] = b.parts ? py::object(from_vector(b.parts->psi)) : py::none();
  d["errors"] = b.errors;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "W-state tomography and whole-from-parts reconstruction";

  py::register_exception<InconsistentMarginalsError>(m, "InconsistentMarginalsError", PyExc_ValueError);
  py::register_exception<AmbiguousPhaseError>(m, "AmbiguousPhaseError", PyExc_RuntimeError);
  py::register_exception<TooMixedError>(m, "TooMixedError", PyExc_RuntimeError);
  py::register_exception<NotHermitianError>(m, "NotHermitianError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("prepare_w", [] { return from_vector(prepare_w()); }, "(|100> + |010> + |001>)/sqrt(3) from the gate circuit.");
  m.def("ghz_state", [] { return from_vector(ghz_state()); });
  m.def("three_qubit_settings", [] { return labels(three_qubit_settings()); });
  m.def("two_qubit_settings", [] { return labels(two_qubit_settings()); });

  m.def(
      "exact_probs", [](const CArray& rho, const std::string& label) {
        return from_probs(exact_probs(to_density(rho), parse_setting(label)));
      },
      py::arg("rho"), py::arg("label"), "Outcome distribution of one setting, qubit A as the most significant bit.");
  m.def(
      "apply_readout_noise",
      [](const std::string& label, const RArray& p, const std::vector<std::pair<double, double>>& errors) {
        return from_probs(apply_readout_noise(to_probs(label, p), to_model(errors)));
      },
      py::arg("label"), py::arg("probs"), py::arg("errors"), "errors: one (p01, p10) pair per measured qubit.");
  m.def(
      "mitigate_probs",
      [](const std::string& label, const RArray& p, const std::vector<RArray>& fs) {
        return from_probs(mitigate_probs(to_probs(label, p), to_calibration(fs)));
      },
      py::arg("label"), py::arg("probs"), py::arg("calibration"));

  m.def(
      "reconstruct_3q", [](const std::map<std::string, RArray>& t) {
        return from_matrix(reconstruct_3q(to_tables(t)).mat());
      },
      py::arg("tables"));
  m.def(
      "reconstruct_2q", [](const std::map<std::string, RArray>& t) {
        return from_matrix(reconstruct_2q(to_tables(t)).mat());
      },
      py::arg("tables"));
  m.def(
      "spectral_correct", [](const CArray& rho) { return from_matrix(spectral_correct(to_density(rho)).mat()); },
      py::arg("rho"));
  m.def(
      "partial_trace",
      [](const CArray& rho, const std::vector<std::size_t>& keep) {
        return from_matrix(partial_trace(to_density(rho), keep).mat());
      },
      py::arg("rho"), py::arg("keep"));

  m.def(
      "diosi_reconstruct",
      [](const CArray& ab, const CArray& bc, double eps_b, double gap) {
        const ReconstructionResult r = diosi_reconstruct({to_density(ab), to_density(bc), eps_b}, gap);
        py::dict d;
        d["psi"] = from_vector(r.psi);
        d["alpha"] = r.phases.alpha;
        d["gamma"] = r.phases.gamma;
        d["residual_ab"] = r.residual_ab;
        d["residual_bc"] = r.residual_bc;
        d["b_discrepancy"] = r.b_discrepancy;
        return d;
      },
      py::arg("rho_ab"), py::arg("rho_bc"), py::arg("eps_b") = 1e-10, py::arg("gap") = kDegeneracyGap);

  m.def(
      "fidelity_pure", [](const CArray& psi, const CArray& rho) { return fidelity_pure(to_vector(psi), to_density(rho)); },
      py::arg("psi"), py::arg("rho"), "sqrt(<psi|rho|psi>)");
  m.def(
      "trace_distance", [](const CArray& a, const CArray& b) { return trace_distance(to_density(a), to_density(b)); },
      py::arg("a"), py::arg("b"));

  m.def(
      "run_pipeline",
      [](std::uint64_t shots, int trials, std::uint64_t seed, bool exact, bool mitigate, bool noisy,
         const std::string& scheme, double eps_b) {
        ExperimentConfig cfg;
        cfg.shots = shots;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.exact = exact;
        cfg.mitigate = mitigate;
        cfg.noise = noisy ? ReadoutModel::device() : ReadoutModel::noiseless(3);
        cfg.scheme = scheme_from_string(scheme);
        cfg.eps_b = eps_b;
        std::vector<TrialResult> results;
        {
          py::gil_scoped_release release;
          results = run_pipeline(cfg);
        }
        py::list trials_out;
        for (const TrialResult& r : results) {
          py::dict d;
          d["trial"] = r.trial_id;
          d["seed"] = r.seed;
          d["unmitigated"] = branch_dict(r.unmitigated);
          d["mitigated"] = r.mitigated ? py::object(branch_dict(*r.mitigated)) : py::none();
          trials_out.append(d);
        }
        py::dict out;
        out["trials"] = trials_out;
        out["report_csv"] = report_csv(results);
        return out;
      },
      py::arg("shots") = 20000, py::arg("trials") = 5, py::arg("seed") = ExperimentConfig{}.seed,
      py::arg("exact") = false, py::arg("mitigate") = true, py::arg("noisy") = true, py::arg("scheme") = "both",
      py::arg("eps_b") = 0.05);
}
