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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_support.hpp"
#include "wtomo/noisesim.hpp"
#include "wtomo/qstate.hpp"
#include "wtomo/tomography.hpp"

namespace wtomo {
namespace {

std::vector<ProbTable> all_probs(const DensityMatrix& rho, const TomographyScheme& scheme) {
  std::vector<ProbTable> out;
  for (const auto& s : scheme.settings) out.push_back(exact_probs(rho, s));
  return out;
}

const ProbTable& table(const std::vector<ProbTable>& ts, const std::string& label) {
  for (const ProbTable& t : ts) {
    if (t.label == label) return t;
  }
  throw std::logic_error("no table " + label);
}

using Terms = std::map<std::pair<std::string, std::size_t>, double>;

Terms terms_of(const TomographyScheme& scheme, ElementRef e) {
  for (const ExtractionRule& r : rules_for(scheme)) {
    if (r.element == e) {
      Terms t;
      for (const ProbTerm& p : r.terms) t[{p.label, p.outcome}] += p.coeff;
      return t;
    }
  }
  throw std::logic_error("no rule for " + e.str(scheme.nqubits));
}

TEST(Rules, EveryParameterIsDeterminedExactlyOnce) {
  for (const TomographyScheme* scheme : {&TomographyScheme::three_qubit(), &TomographyScheme::two_qubit()}) {
    const std::size_t dim = std::size_t{1} << scheme->nqubits;
    std::set<std::tuple<std::size_t, std::size_t, int>> seen;
    for (const ExtractionRule& r : rules_for(*scheme)) {
      EXPECT_LE(r.element.row, r.element.col);
      EXPECT_TRUE(seen.insert({r.element.row, r.element.col, static_cast<int>(r.element.part)}).second)
          << r.element.str(scheme->nqubits);
    }
    EXPECT_EQ(seen.size(), dim * dim);
  }
}

TEST(Rules, SingleQubitCoherencesMatchHandFormulas) {
  const TomographyScheme& s3 = TomographyScheme::three_qubit();
  // Re rho_{0jk;1jk} = [P_XZZ(0jk) - P_XZZ(1jk)]/2; RX(pi/2) then Z reads +Y,
  // so Im rho_{0jk;1jk} = [P_YZZ(1jk) - P_YZZ(0jk)]/2. Same pattern on B and C.
  const char* re_labels[] = {"XZZ", "ZXZ", "ZZX"};
  const char* im_labels[] = {"YZZ", "ZYZ", "ZZY"};
  for (std::size_t q = 0; q < 3; ++q) {
    const std::size_t bit = std::size_t{4} >> q;
    for (std::size_t x = 0; x < 8; ++x) {
      if (x & bit) continue;
      const Terms re{{{re_labels[q], x}, 0.5}, {{re_labels[q], x | bit}, -0.5}};
      const Terms im{{{im_labels[q], x}, -0.5}, {{im_labels[q], x | bit}, 0.5}};
      EXPECT_EQ(terms_of(s3, {x, x | bit, ElementPart::Re}), re);
      EXPECT_EQ(terms_of(s3, {x, x | bit, ElementPart::Im}), im);
    }
  }
  for (std::size_t x = 0; x < 8; ++x) {
    EXPECT_EQ(terms_of(s3, {x, x, ElementPart::Diag}), (Terms{{{"ZZZ", x}, 1.0}}));
  }
}

TEST(Rules, CnotSettingReadsThePermutedCoherence) {
  // CNOT_AB maps |a b c> to |a, a^b, c>, so the XZZ formula applied after it
  // reads Re rho_{0jk;1(1-j)k}.
  const TomographyScheme& s3 = TomographyScheme::three_qubit();
  EXPECT_EQ(terms_of(s3, {0b010, 0b100, ElementPart::Re}),
            (Terms{{{"CXZZ_AB", 0b010}, 0.5}, {{"CXZZ_AB", 0b110}, -0.5}}));
  EXPECT_EQ(terms_of(s3, {0b010, 0b100, ElementPart::Im}),
            (Terms{{{"CYZZ_AB", 0b010}, -0.5}, {{"CYZZ_AB", 0b110}, 0.5}}));
}

TEST(Rules, PairedSettingsShareTheirTargets) {
  const TomographyScheme& s3 = TomographyScheme::three_qubit();
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0b000, 0b111}, {0b011, 0b100}, {0b001, 0b110}, {0b010, 0b101}}) {
    std::set<std::string> re_labels, im_labels;
    for (const auto& [key, c] : terms_of(s3, {a, b, ElementPart::Re})) re_labels.insert(key.first);
    for (const auto& [key, c] : terms_of(s3, {a, b, ElementPart::Im})) im_labels.insert(key.first);
    EXPECT_EQ(re_labels, (std::set<std::string>{"CXXZ_BC", "CYYZ_BC"}));
    EXPECT_EQ(im_labels, (std::set<std::string>{"CXYZ_BC", "CYXZ_BC"}));
  }
}

TEST(Rules, TwoQubitHandFormulas) {
  const TomographyScheme& s2 = TomographyScheme::two_qubit();
  EXPECT_EQ(terms_of(s2, {0b00, 0b01, ElementPart::Re}), (Terms{{{"ZX", 0b00}, 0.5}, {{"ZX", 0b01}, -0.5}}));
  EXPECT_EQ(terms_of(s2, {0b00, 0b01, ElementPart::Im}), (Terms{{{"ZY", 0b00}, -0.5}, {{"ZY", 0b01}, 0.5}}));
  EXPECT_EQ(terms_of(s2, {0b01, 0b11, ElementPart::Im}), (Terms{{{"YZ", 0b01}, -0.5}, {{"YZ", 0b11}, 0.5}}));
  EXPECT_EQ(terms_of(s2, {0b01, 0b10, ElementPart::Re}), (Terms{{{"CXZ_AB", 0b01}, 0.5}, {{"CXZ_AB", 0b11}, -0.5}}));
}

TEST(Rules, HandFormulasHoldNumerically) {
  std::mt19937_64 rng(21);
  const DensityMatrix rho(testing::random_density_matrix(8, rng));
  const auto ts = all_probs(rho, TomographyScheme::three_qubit());
  const auto& x = table(ts, "XZZ").probs;
  const auto& y = table(ts, "YZZ").probs;
  EXPECT_NEAR((x[0b011] - x[0b111]) / 2, rho(0b011, 0b111).real(), 1e-14);
  EXPECT_NEAR((y[0b111] - y[0b011]) / 2, rho(0b011, 0b111).imag(), 1e-14);
  const auto& c = table(ts, "CXZZ_AB").probs;
  EXPECT_NEAR((c[0b010] - c[0b110]) / 2, rho(0b010, 0b100).real(), 1e-14);
}

TEST(Reconstruct, WStateSettingExample) {
  const DensityMatrix w = DensityMatrix::from_pure(w_closed_form());
  const ProbTable p = exact_probs(w, parse_setting("CXZZ_AB"));
  EXPECT_NEAR((p.probs[0b010] - p.probs[0b110]) / 2, 1.0 / 3.0, 1e-15);
  const DensityMatrix r = reconstruct_3q(all_probs(w, TomographyScheme::three_qubit()));
  EXPECT_NEAR(r(0b010, 0b100).real(), 1.0 / 3.0, 1e-12);
  EXPECT_LE(max_abs_diff(r, w), 1e-12);
}

TEST(Reconstruct, RoundTripRandomThreeQubitStates) {
  std::mt19937_64 rng(22);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const DensityMatrix rho(testing::random_density_matrix(8, rng));
    worst = std::max(worst, max_abs_diff(reconstruct_3q(all_probs(rho, TomographyScheme::three_qubit())), rho));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Reconstruct, RoundTripRandomTwoQubitStates) {
  std::mt19937_64 rng(23);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const DensityMatrix rho(testing::random_density_matrix(4, rng));
    worst = std::max(worst, max_abs_diff(reconstruct_2q(all_probs(rho, TomographyScheme::two_qubit())), rho));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Reconstruct, RejectsIncompleteOrMalformedInput) {
  const DensityMatrix w = DensityMatrix::from_pure(w_closed_form());
  auto ts = all_probs(w, TomographyScheme::three_qubit());
  auto missing = ts;
  missing.pop_back();
  EXPECT_THROW(reconstruct_3q(missing), MissingSettingError);
  auto unnormalized = ts;
  unnormalized[3].probs[0] += 0.01;
  EXPECT_THROW(reconstruct_3q(unnormalized), std::invalid_argument);
  auto short_table = ts;
  short_table[0].probs.resize(4);
  EXPECT_THROW(reconstruct_3q(short_table), std::invalid_argument);
  EXPECT_THROW(reconstruct_2q(ts), MissingSettingError);
}

TEST(Reconstruct, SampledDataGivesHermitianUnitTrace) {
  const DensityMatrix w = DensityMatrix::from_pure(w_closed_form());
  std::vector<ProbTable> ts;
  std::uint64_t seed = 5;
  for (const auto& s : three_qubit_settings()) ts.push_back(sample_shots(exact_probs(w, s), 2000, seed++).frequencies());
  const DensityMatrix r = reconstruct_3q(ts);
  EXPECT_NEAR(r.mat().trace().real(), 1.0, 1e-12);
  EXPECT_LE(hermiticity_defect(r.mat()), 0.0);
  EXPECT_LE(max_abs_diff(r, w), 0.1);
}

TEST(Lsq, AgreesWithLinearInversionOnExactData) {
  std::mt19937_64 rng(24);
  for (const TomographyScheme* scheme : {&TomographyScheme::three_qubit(), &TomographyScheme::two_qubit()}) {
    const DensityMatrix rho(testing::random_density_matrix(std::size_t{1} << scheme->nqubits, rng));
    const LsqResult fit = lsq_reconstruct(*scheme, all_probs(rho, *scheme));
    EXPECT_LE(max_abs_diff(fit.rho, rho), 1e-10);
    EXPECT_LE(fit.residual, 1e-10);
    EXPECT_GT(fit.condition_number, 1.0);
    EXPECT_TRUE(std::isfinite(fit.condition_number));
  }
}

TEST(Lsq, NoisyDataLeavesAResidual) {
  const DensityMatrix w = DensityMatrix::from_pure(w_closed_form());
  std::vector<ProbTable> ts;
  std::uint64_t seed = 50;
  for (const auto& s : two_qubit_settings()) {
    const DensityMatrix ab(testing::brute_partial_trace(w.mat(), 3, {0, 1}));
    ts.push_back(sample_shots(exact_probs(ab, s), 1000, seed++).frequencies());
  }
  const LsqResult fit = lsq_reconstruct(TomographyScheme::two_qubit(), ts);
  EXPECT_GT(fit.residual, 1e-4);
  EXPECT_NEAR(fit.rho.mat().trace().real(), 1.0, 1e-12);
}

TEST(Lsq, UnderdeterminedSchemeIsSingular) {
  TomographyScheme partial;
  partial.kind = SchemeKind::TwoQubit7;
  partial.nqubits = 2;
  partial.settings = {parse_setting("ZZ"), parse_setting("XZ")};
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  std::vector<ProbTable> ts{exact_probs(rho, partial.settings[0]), exact_probs(rho, partial.settings[1])};
  try {
    lsq_reconstruct(partial, ts);
    FAIL() << "expected SingularSystemError";
  } catch (const SingularSystemError& e) {
    EXPECT_GT(e.condition_number, 1e12);
  }
}

TEST(Rules, UnreachableTargetIsReported) {
  TomographyScheme bad;
  bad.nqubits = 2;
  bad.settings = {parse_setting("ZZ")};
  bad.groups = {{{"ZZ"}, {{0, 1, ElementPart::Re}}}};
  EXPECT_THROW(derive_rules(bad), RuleDerivationError);
}

}  // namespace
}  // namespace wtomo
