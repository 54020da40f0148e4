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

#include "wtomo/noisesim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wtomo {

namespace {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::vector<double> checked_cdf(const ProbTable& p) {
  if (p.probs.empty()) throw std::invalid_argument("sample_shots: empty distribution");
  double total = 0.0;
  for (double x : p.probs) {
    if (!std::isfinite(x) || x < -1e-12) {
      throw std::invalid_argument("sample_shots: invalid probability in '" + p.label + "'");
    }
    total += std::max(x, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_shots: probabilities of '" + p.label + "' sum to " + std::to_string(total));
  }
  std::vector<double> cdf(p.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    acc += std::max(p.probs[i], 0.0) / total;
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, std::mt19937_64& gen) {
  const double u = uniform01(gen);
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
}

void check_shots(std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
}

}  // namespace

ProbTable CountsTable::frequencies() const {
  if (shots == 0) throw std::invalid_argument("counts table '" + label + "' has zero shots");
  ProbTable p{label, nqubits, std::vector<double>(counts.size())};
  for (std::size_t i = 0; i < counts.size(); ++i) p.probs[i] = static_cast<double>(counts[i]) / shots;
  return p;
}

ReadoutModel ReadoutModel::noiseless(std::size_t nqubits) {
  ReadoutModel m;
  for (std::size_t q = 0; q < nqubits; ++q) m.qubits.push_back({std::string(1, static_cast<char>('A' + q)), 0.0, 0.0});
  return m;
}

ReadoutModel ReadoutModel::device() {
  return {{{"A", 0.023, 0.008}, {"B", 0.004, 0.009}, {"C", 0.030, 0.034}}};
}

ReadoutModel ReadoutModel::select(std::span<const std::size_t> which) const {
  ReadoutModel m;
  for (std::size_t q : which) {
    if (q >= qubits.size()) throw std::out_of_range("readout model has no qubit " + std::to_string(q));
    m.qubits.push_back(qubits[q]);
  }
  return m;
}

std::vector<CalibrationMatrix> ReadoutModel::matrices() const {
  std::vector<CalibrationMatrix> out;
  out.reserve(qubits.size());
  for (const QubitReadout& q : qubits) out.push_back(CalibrationMatrix::from_errors(q.p01, q.p10));
  return out;
}

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over base ^ (stream << 32)
  std::uint64_t z = base ^ (stream << 32) ^ stream;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ProbTable exact_probs(const DensityMatrix& rho, const MeasurementSetting& s) {
  if (rho.nqubits() != s.nqubits) {
    throw DimensionError("exact_probs: setting '" + s.label + "' acts on " + std::to_string(s.nqubits) +
                         " qubits, state has " + std::to_string(rho.nqubits()));
  }
  const ComplexMatrix u = setting_unitary(s);
  const ComplexMatrix rotated = u * rho.mat() * u.adjoint();
  ProbTable p{s.label, s.nqubits, std::vector<double>(rho.dim())};
  for (std::size_t m = 0; m < rho.dim(); ++m) p.probs[m] = rotated(m, m).real();
  return p;
}

ProbTable apply_readout_noise(const ProbTable& p, const ReadoutModel& model) {
  if (model.size() != p.nqubits) {
    throw std::invalid_argument("apply_readout_noise: model covers " + std::to_string(model.size()) +
                                " qubits, table '" + p.label + "' has " + std::to_string(p.nqubits));
  }
  const std::vector<CalibrationMatrix> fs = model.matrices();
  return {p.label, p.nqubits, apply_per_qubit(p.probs, fs)};
}

CountsTable sample_shots(const ProbTable& p, std::uint64_t shots, std::uint64_t seed) {
  check_shots(shots);
  const std::vector<double> cdf = checked_cdf(p);
  std::mt19937_64 gen(seed);
  CountsTable c{p.label, p.nqubits, std::vector<std::uint64_t>(p.probs.size(), 0), shots};
  for (std::uint64_t s = 0; s < shots; ++s) ++c.counts[draw(cdf, gen)];
  return c;
}

CountsTable sample_shots_with_flips(const ProbTable& ideal, const ReadoutModel& model, std::uint64_t shots,
                                    std::uint64_t seed) {
  check_shots(shots);
  if (model.size() != ideal.nqubits) throw std::invalid_argument("sample_shots_with_flips: model/table qubit mismatch");
  const std::vector<double> cdf = checked_cdf(ideal);
  const std::size_t n = ideal.nqubits;
  std::mt19937_64 gen(seed);
  CountsTable c{ideal.label, n, std::vector<std::uint64_t>(ideal.probs.size(), 0), shots};
  for (std::uint64_t s = 0; s < shots; ++s) {
    std::size_t outcome = draw(cdf, gen);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = std::size_t{1} << (n - 1 - q);
      const double flip = (outcome & bit) ? model.qubits[q].p01 : model.qubits[q].p10;
      if (uniform01(gen) < flip) outcome ^= bit;
    }
    ++c.counts[outcome];
  }
  return c;
}

std::vector<CalibrationMatrix> simulate_calibration(const ReadoutModel& model, std::uint64_t shots,
                                                    std::uint64_t seed) {
  check_shots(shots);
  std::vector<CalibrationMatrix> out;
  out.reserve(model.size());
  for (std::size_t q = 0; q < model.size(); ++q) {
    const ReadoutModel single = model.select(std::vector<std::size_t>{q});
    CalibrationMatrix f;
    for (int prep = 0; prep < 2; ++prep) {
      const ProbTable ideal{"CAL" + std::to_string(q) + "_" + std::to_string(prep), 1,
                            prep == 0 ? std::vector<double>{1.0, 0.0} : std::vector<double>{0.0, 1.0}};
      const CountsTable counts = sample_shots(apply_readout_noise(ideal, single), shots, stream_seed(seed, 2 * q + prep));
      f.f[0][prep] = static_cast<double>(counts.counts[0]) / shots;
      f.f[1][prep] = static_cast<double>(counts.counts[1]) / shots;
    }
    out.push_back(f);
  }
  return out;
}

}  // namespace wtomo
