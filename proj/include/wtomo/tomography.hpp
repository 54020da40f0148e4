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

#ifndef WTOMO_TOMOGRAPHY_HPP
#define WTOMO_TOMOGRAPHY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wtomo/density.hpp"
#include "wtomo/noisesim.hpp"
#include "wtomo/qstate.hpp"

namespace wtomo {

enum class ElementPart { Diag, Re, Im };

/// One real parameter of a density matrix: Re/Im of rho(row, col), row <= col.
struct ElementRef {
  std::size_t row = 0;
  std::size_t col = 0;
  ElementPart part = ElementPart::Diag;

  std::string str(std::size_t nqubits) const;
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

/// A group of settings and the parameters they jointly determine. Most groups
/// hold a single setting; the last four three-qubit settings pair up.
struct SettingGroup {
  std::vector<std::string> labels;
  std::vector<ElementRef> targets;
};

enum class SchemeKind { TwoQubit7, ThreeQubit17 };

struct TomographyScheme {
  SchemeKind kind = SchemeKind::ThreeQubit17;
  std::size_t nqubits = 0;
  std::vector<MeasurementSetting> settings;
  std::vector<SettingGroup> groups;

  static const TomographyScheme& three_qubit();
  static const TomographyScheme& two_qubit();

  const MeasurementSetting& setting(const std::string& label) const;
};

struct ProbTerm {
  std::string label;
  std::size_t outcome = 0;
  double coeff = 0.0;
};

/// Target parameter = sum of coeff * P_label(outcome).
struct ExtractionRule {
  ElementRef element;
  std::vector<ProbTerm> terms;
};

class RuleDerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingSettingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(const std::string& what, double condition)
      : std::runtime_error(what), condition_number(condition) {}
  double condition_number;
};

/// Derives the linear extraction formula for every target of every group.
///
/// For a target T, the rule is the minimum-norm coefficient vector c with
/// sum_{s,m} c_{s,m} U_s^dagger |m><m| U_s = O_T over the group's settings,
/// where Tr(rho O_T) is the targeted real parameter. The identity is checked
/// to 1e-10 and coefficients are snapped to multiples of 1/8; a target that
/// the group cannot express raises RuleDerivationError.
std::vector<ExtractionRule> derive_rules(const TomographyScheme& scheme);

/// Cached derive_rules for the two built-in schemes.
const std::vector<ExtractionRule>& rules_for(const TomographyScheme& scheme);

/// Closed-form assembly from per-setting tables. The output is Hermitian with
/// trace equal to the summed diagonal probabilities, but may be indefinite.
DensityMatrix reconstruct(const TomographyScheme& scheme, std::span<const ProbTable> tables);
DensityMatrix reconstruct_3q(std::span<const ProbTable> tables);
DensityMatrix reconstruct_2q(std::span<const ProbTable> tables);

struct LsqResult {
  DensityMatrix rho;
  double residual = 0.0;          // sqrt of the summed squared probability misfit
  double condition_number = 0.0;  // of the normal matrix
};

/// Least-squares fit of a Hermitian unit-trace matrix to all outcome
/// probabilities of all settings in the scheme.
LsqResult lsq_reconstruct(const TomographyScheme& scheme, std::span<const ProbTable> tables);

}  // namespace wtomo

#endif  // WTOMO_TOMOGRAPHY_HPP
