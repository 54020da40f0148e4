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

#ifndef WTOMO_CALIBRATION_HPP
#define WTOMO_CALIBRATION_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

namespace wtomo {

/// Single-qubit readout confusion matrix, column j = reading distribution
/// given preparation |j>:
///
///   [[p(0|0), p(0|1)],
///    [p(1|0), p(1|1)]]
struct CalibrationMatrix {
  std::array<std::array<double, 2>, 2> f{{{1.0, 0.0}, {0.0, 1.0}}};

  static CalibrationMatrix identity() { return {}; }
  /// From the flip probabilities p(0|1) and p(1|0).
  static CalibrationMatrix from_errors(double p01, double p10);

  double operator()(int r, int c) const { return f[r][c]; }
  double det() const { return f[0][0] * f[1][1] - f[0][1] * f[1][0]; }
  /// Plain 2x2 inverse; throws if |det| <= 1e-6.
  CalibrationMatrix inverse() const;
  /// True if entries lie in [0, 1] and columns sum to 1 within `tol`.
  bool is_column_stochastic(double tol = 1e-12) const;
};

/// Applies (M_0 (x) M_1 (x) ... ) to a probability vector indexed with qubit
/// 0 as the most significant bit, one qubit at a time.
std::vector<double> apply_per_qubit(std::span<const double> p, std::span<const CalibrationMatrix> mats);

}  // namespace wtomo

#endif  // WTOMO_CALIBRATION_HPP
