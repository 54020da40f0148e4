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

#include "wtomo/io.hpp"

#include <fstream>
#include <stdexcept>

namespace wtomo::io {

namespace {

std::size_t parse_bits(const std::string& bits, std::size_t nqubits) {
  if (bits.size() != nqubits) throw std::invalid_argument("bit string '" + bits + "' has the wrong length");
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bit string '" + bits + "'");
    idx = (idx << 1) | static_cast<std::size_t>(c == '1');
  }
  return idx;
}

}  // namespace

std::string bit_string(std::size_t outcome, std::size_t nqubits) {
  std::string s(nqubits, '0');
  for (std::size_t b = 0; b < nqubits; ++b) {
    if ((outcome >> (nqubits - 1 - b)) & 1U) s[b] = '1';
  }
  return s;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ri = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const json& re = j.at("re");
  const std::size_t rows = re.size();
  if (rows == 0) throw std::invalid_argument("matrix JSON: empty 're'");
  const std::size_t cols = re.at(0).size();
  const bool has_im = j.contains("im");
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (re.at(r).size() != cols) throw std::invalid_argument("matrix JSON: ragged 're'");
    for (std::size_t c = 0; c < cols; ++c) {
      const double x = re.at(r).at(c).get<double>();
      const double y = has_im ? j.at("im").at(r).at(c).get<double>() : 0.0;
      m(r, c) = cplx(x, y);
    }
  }
  return m;
}

json density_to_json(const DensityMatrix& rho) {
  json j = matrix_to_json(rho.mat());
  j["nqubits"] = rho.nqubits();
  return j;
}

DensityMatrix density_from_json(const json& j, bool renormalize) {
  ComplexMatrix m = matrix_from_json(j);
  if (j.contains("nqubits") && (std::size_t{1} << j.at("nqubits").get<std::size_t>()) != m.rows()) {
    throw std::invalid_argument("density JSON: 'nqubits' does not match the matrix size");
  }
  return renormalize ? DensityMatrix::normalized(std::move(m)) : DensityMatrix(std::move(m));
}

json reconstruction_to_json(const ReconstructionResult& r) {
  const DensityMatrix rho = DensityMatrix::from_pure(r.psi);
  json j = density_to_json(rho);
  json re = json::array();
  json im = json::array();
  for (const cplx& a : r.psi.entries()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  j["psi"] = {{"re", re}, {"im", im}};
  j["alpha"] = {r.phases.alpha[0], r.phases.alpha[1]};
  j["gamma"] = {r.phases.gamma[0], r.phases.gamma[1]};
  j["phase_residual"] = r.phases.residual;
  j["residual_ab"] = r.residual_ab;
  j["residual_bc"] = r.residual_bc;
  j["truncated_mass"] = {{"ab", r.truncated_ab}, {"bc", r.truncated_bc}};
  j["b_discrepancy"] = r.b_discrepancy;
  return j;
}

json noise_to_json(const ReadoutModel& m) {
  json j = json::object();
  for (const QubitReadout& q : m.qubits) j[q.name] = {{"p01", q.p01}, {"p10", q.p10}};
  return j;
}

ReadoutModel noise_from_json(const json& j) {
  ReadoutModel m;
  for (const auto& [name, v] : j.items()) {
    const double p01 = v.at("p01").get<double>();
    const double p10 = v.at("p10").get<double>();
    if (!(p01 >= 0.0 && p01 <= 1.0 && p10 >= 0.0 && p10 <= 1.0)) {
      throw std::invalid_argument("noise model: probabilities for qubit '" + name + "' outside [0, 1]");
    }
    m.qubits.push_back({name, p01, p10});
  }
  return m;
}

json counts_to_json(const CountsFile& f) {
  json j = json::object();
  for (const CountsTable& t : f.tables) {
    json row = json::object();
    for (std::size_t o = 0; o < t.counts.size(); ++o) row[bit_string(o, t.nqubits)] = t.counts[o];
    j[t.label] = std::move(row);
  }
  j["shots"] = f.shots;
  if (f.seed) j["seed"] = *f.seed;
  if (f.noise) j["noise"] = noise_to_json(*f.noise);
  return j;
}

CountsFile counts_from_json(const json& j) {
  CountsFile f;
  f.shots = j.at("shots").get<std::uint64_t>();
  if (j.contains("seed")) f.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("noise")) f.noise = noise_from_json(j.at("noise"));
  for (const auto& [label, row] : j.items()) {
    if (label == "shots" || label == "seed" || label == "noise") continue;
    const MeasurementSetting s = parse_setting(label);
    CountsTable t{label, s.nqubits, std::vector<std::uint64_t>(std::size_t{1} << s.nqubits, 0), 0};
    for (const auto& [bits, count] : row.items()) {
      t.counts[parse_bits(bits, s.nqubits)] = count.get<std::uint64_t>();
    }
    for (std::uint64_t c : t.counts) t.shots += c;
    f.tables.push_back(std::move(t));
  }
  return f;
}

json calibration_to_json(const std::vector<CalibrationMatrix>& fs, const std::vector<std::string>& names) {
  if (fs.size() != names.size()) throw std::invalid_argument("calibration_to_json: name count mismatch");
  json j = json::object();
  for (std::size_t q = 0; q < fs.size(); ++q) {
    j[names[q]] = {{fs[q].f[0][0], fs[q].f[0][1]}, {fs[q].f[1][0], fs[q].f[1][1]}};
  }
  return j;
}

std::vector<CalibrationMatrix> calibration_from_json(const json& j, const std::vector<std::string>& names) {
  std::vector<CalibrationMatrix> out;
  for (const std::string& name : names) {
    if (!j.contains(name)) throw std::invalid_argument("calibration file has no entry for qubit '" + name + "'");
    const json& m = j.at(name);
    CalibrationMatrix f;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) f.f[r][c] = m.at(r).at(c).get<double>();
    }
    if (!f.is_column_stochastic(1e-9)) {
      throw std::invalid_argument("calibration matrix for qubit '" + name + "' is not column-stochastic");
    }
    out.push_back(f);
  }
  return out;
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  return json::parse(in);
}

void write_json(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << j.dump(2) << '\n';
}

}  // namespace wtomo::io
