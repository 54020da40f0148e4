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

#ifndef WTOMO_IO_HPP
#define WTOMO_IO_HPP

// JSON file formats.
//
//   density matrix  {"nqubits": n, "re": [[...]], "im": [[...]]}
//   counts          {"<label>": {"<bits>": count, ...}, ..., "shots": n,
//                    "seed": s, "noise": {"<qubit>": {"p01": x, "p10": y}}}
//   calibration     {"<qubit>": [[f00, f01], [f10, f11]], ...}
//   noise model     {"<qubit>": {"p01": x, "p10": y}, ...}
//
// Bit strings have qubit A as their leftmost character.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wtomo/calibration.hpp"
#include "wtomo/density.hpp"
#include "wtomo/noisesim.hpp"
#include "wtomo/wholeparts.hpp"

namespace wtomo::io {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
/// Reads the "re"/"im" arrays without validating physicality.
ComplexMatrix matrix_from_json(const json& j);

json density_to_json(const DensityMatrix& rho);
/// Validates the matrix. With `renormalize`, a trace other than one is
/// rescaled first (printed matrices are often rounded off unit trace).
DensityMatrix density_from_json(const json& j, bool renormalize = false);

json reconstruction_to_json(const ReconstructionResult& r);

struct CountsFile {
  std::vector<CountsTable> tables;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;
  std::optional<ReadoutModel> noise;
};

json counts_to_json(const CountsFile& f);
CountsFile counts_from_json(const json& j);

json noise_to_json(const ReadoutModel& m);
ReadoutModel noise_from_json(const json& j);

/// Keys are the qubit names, in register order.
json calibration_to_json(const std::vector<CalibrationMatrix>& fs, const std::vector<std::string>& names);
/// Returns the matrices for `names`, in that order.
std::vector<CalibrationMatrix> calibration_from_json(const json& j, const std::vector<std::string>& names);

json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const json& j);

std::string bit_string(std::size_t outcome, std::size_t nqubits);

}  // namespace wtomo::io

#endif  // WTOMO_IO_HPP
