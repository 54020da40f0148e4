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

#ifndef WTOMO_NOISESIM_HPP
#define WTOMO_NOISESIM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wtomo/calibration.hpp"
#include "wtomo/density.hpp"
#include "wtomo/qstate.hpp"

namespace wtomo {

/// Outcome distribution of one measurement setting. Outcome index bit order
/// matches the basis order: qubit 0 is the most significant bit.
struct ProbTable {
  std::string label;
  std::size_t nqubits = 0;
  std::vector<double> probs;
};

struct CountsTable {
  std::string label;
  std::size_t nqubits = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;

  ProbTable frequencies() const;
};

struct QubitReadout {
  std::string name;
  double p01 = 0.0;  // read 0 given |1>
  double p10 = 0.0;  // read 1 given |0>
};

/// Independent per-qubit readout confusion.
struct ReadoutModel {
  std::vector<QubitReadout> qubits;

  static ReadoutModel noiseless(std::size_t nqubits);
  /// Device values for q97, q98, q99 (register qubits A, B, C).
  static ReadoutModel device();

  std::size_t size() const { return qubits.size(); }
  ReadoutModel select(std::span<const std::size_t> which) const;
  std::vector<CalibrationMatrix> matrices() const;
};

/// Name of the pseudo-random generator behind every sampled quantity.
inline constexpr const char* kGeneratorName = "mt19937_64";

/// Seed for an independent sub-stream (a setting, a calibration circuit)
/// derived from a base seed by splitmix64 mixing.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream);

ProbTable exact_probs(const DensityMatrix& rho, const MeasurementSetting& s);

/// p' = (F_0 (x) F_1 (x) ...) p. The model must cover exactly the measured qubits.
ProbTable apply_readout_noise(const ProbTable& p, const ReadoutModel& model);

/// Multinomial draw of `shots` outcomes by inverse-CDF sampling.
CountsTable sample_shots(const ProbTable& p, std::uint64_t shots, std::uint64_t seed);

/// Per-shot variant: draws the ideal outcome from `ideal`, then flips each bit
/// independently according to `model`. Same distribution as
/// sample_shots(apply_readout_noise(ideal, model), ...) but a different stream.
CountsTable sample_shots_with_flips(const ProbTable& ideal, const ReadoutModel& model, std::uint64_t shots,
                                    std::uint64_t seed);

/// Two single-qubit calibration circuits per qubit (prepare |0>, prepare |1>),
/// read through `model`; returns the empirical confusion matrix per qubit.
std::vector<CalibrationMatrix> simulate_calibration(const ReadoutModel& model, std::uint64_t shots,
                                                    std::uint64_t seed);

}  // namespace wtomo

#endif  // WTOMO_NOISESIM_HPP
