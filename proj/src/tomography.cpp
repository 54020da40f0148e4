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

#include "wtomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace wtomo {

namespace {

std::size_t index_of(std::string_view bits) {
  std::size_t idx = 0;
  for (char c : bits) idx = (idx << 1) | static_cast<std::size_t>(c == '1');
  return idx;
}

std::string bit_string(std::size_t idx, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t b = 0; b < n; ++b) {
    if ((idx >> (n - 1 - b)) & 1U) s[b] = '1';
  }
  return s;
}

ElementRef re(std::string_view a, std::string_view b) { return {index_of(a), index_of(b), ElementPart::Re}; }

std::vector<ElementRef> diagonal(std::size_t nqubits) {
  std::vector<ElementRef> out;
  for (std::size_t i = 0; i < (std::size_t{1} << nqubits); ++i) out.push_back({i, i, ElementPart::Diag});
  return out;
}

// Same element list with Re replaced by Im.
std::vector<ElementRef> imag_of(std::vector<ElementRef> els) {
  for (ElementRef& e : els) e.part = ElementPart::Im;
  return els;
}

TomographyScheme build_three_qubit() {
  TomographyScheme s;
  s.kind = SchemeKind::ThreeQubit17;
  s.nqubits = 3;
  s.settings = three_qubit_settings();

  const std::vector<ElementRef> a_flip = {re("000", "100"), re("001", "101"), re("010", "110"), re("011", "111")};
  const std::vector<ElementRef> b_flip = {re("000", "010"), re("001", "011"), re("100", "110"), re("101", "111")};
  const std::vector<ElementRef> c_flip = {re("000", "001"), re("010", "011"), re("100", "101"), re("110", "111")};
  const std::vector<ElementRef> ab_flip = {re("000", "110"), re("001", "111"), re("010", "100"), re("011", "101")};
  const std::vector<ElementRef> bc_flip = {re("000", "011"), re("001", "010"), re("100", "111"), re("101", "110")};
  const std::vector<ElementRef> ac_flip = {re("000", "101"), re("001", "100"), re("010", "111"), re("011", "110")};
  const std::vector<ElementRef> abc_flip = {re("000", "111"), re("011", "100"), re("001", "110"), re("010", "101")};

  s.groups = {
      {{"ZZZ"}, diagonal(3)},
      {{"XZZ"}, a_flip},
      {{"ZXZ"}, b_flip},
      {{"ZZX"}, c_flip},
      {{"YZZ"}, imag_of(a_flip)},
      {{"ZYZ"}, imag_of(b_flip)},
      {{"ZZY"}, imag_of(c_flip)},
      {{"CXZZ_AB"}, ab_flip},
      {{"CZXZ_BC"}, bc_flip},
      {{"CZZX_CA"}, ac_flip},
      {{"CYZZ_AB"}, imag_of(ab_flip)},
      {{"CZYZ_BC"}, imag_of(bc_flip)},
      {{"CZZY_CA"}, imag_of(ac_flip)},
      // XX and YY correlations on ab after CNOT_BC give sums and differences
      // of the same pairs of elements, so these settings work in pairs.
      {{"CXXZ_BC", "CYYZ_BC"}, abc_flip},
      {{"CXYZ_BC", "CYXZ_BC"}, imag_of(abc_flip)},
  };
  return s;
}

TomographyScheme build_two_qubit() {
  TomographyScheme s;
  s.kind = SchemeKind::TwoQubit7;
  s.nqubits = 2;
  s.settings = two_qubit_settings();
  const std::vector<ElementRef> a_flip = {re("00", "10"), re("01", "11")};
  const std::vector<ElementRef> b_flip = {re("00", "01"), re("10", "11")};
  const std::vector<ElementRef> ab_flip = {re("00", "11"), re("01", "10")};
  s.groups = {
      {{"ZZ"}, diagonal(2)},
      {{"XZ"}, a_flip},
      {{"ZY"}, imag_of(b_flip)},
      {{"ZX"}, b_flip},
      {{"YZ"}, imag_of(a_flip)},
      {{"CXZ_AB"}, ab_flip},
      {{"CYZ_AB"}, imag_of(ab_flip)},
  };
  return s;
}

// Hermitian operator O with Tr(rho O) equal to the referenced parameter.
ComplexMatrix target_operator(const ElementRef& e, std::size_t dim) {
  ComplexMatrix o(dim, dim);
  switch (e.part) {
    case ElementPart::Diag: o(e.row, e.row) = 1.0; break;
    case ElementPart::Re:
      o(e.col, e.row) += 0.5;
      o(e.row, e.col) += 0.5;
      break;
    case ElementPart::Im:
      o(e.col, e.row) += cplx(0.0, -0.5);
      o(e.row, e.col) += cplx(0.0, 0.5);
      break;
  }
  return o;
}

struct MeasurementOperator {
  std::string label;
  std::size_t outcome;
  ComplexMatrix op;  // U^dagger |m><m| U
};

std::vector<MeasurementOperator> measurement_operators(const MeasurementSetting& s) {
  const ComplexMatrix u = setting_unitary(s);
  const std::size_t dim = u.rows();
  std::vector<MeasurementOperator> out;
  for (std::size_t m = 0; m < dim; ++m) {
    ComplexMatrix op(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) op(i, j) = std::conj(u(m, i)) * u(m, j);
    }
    out.push_back({s.label, m, std::move(op)});
  }
  return out;
}

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Re Tr(a^dagger b)
  double s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) s += (std::conj(a.entries()[i]) * b.entries()[i]).real();
  return s;
}

// Solves (N) x = rhs for a symmetric positive semidefinite N through its
// spectrum, dropping directions with eigenvalue below rel_cut * lambda_max.
std::vector<double> spectral_solve(const EigenSystem& es, std::span<const double> rhs, double rel_cut) {
  const std::size_t n = rhs.size();
  std::vector<double> x(n, 0.0);
  const double lmax = es.values.front();
  for (std::size_t k = 0; k < n; ++k) {
    if (es.values[k] <= rel_cut * lmax) continue;
    cplx proj = 0.0;
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(es.vectors[k][i]) * rhs[i];
    proj /= es.values[k];
    for (std::size_t i = 0; i < n; ++i) x[i] += (proj * es.vectors[k][i]).real();
  }
  return x;
}

EigenSystem gram_spectrum(const std::vector<std::vector<double>>& g) {
  const std::size_t n = g.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g[i][j];
  }
  return eig_hermitian(m);
}

std::map<std::string, const ProbTable*> index_tables(const TomographyScheme& scheme,
                                                     std::span<const ProbTable> tables) {
  std::map<std::string, const ProbTable*> by_label;
  for (const ProbTable& t : tables) by_label[t.label] = &t;
  const std::size_t dim = std::size_t{1} << scheme.nqubits;
  for (const MeasurementSetting& s : scheme.settings) {
    const auto it = by_label.find(s.label);
    if (it == by_label.end()) throw MissingSettingError("missing probability table for setting '" + s.label + "'");
    const ProbTable& t = *it->second;
    if (t.probs.size() != dim) {
      throw std::invalid_argument("table '" + s.label + "' has " + std::to_string(t.probs.size()) + " outcomes, expected " +
                                  std::to_string(dim));
    }
    double total = 0.0;
    for (double p : t.probs) {
      if (!std::isfinite(p)) throw std::invalid_argument("table '" + s.label + "' has a non-finite entry");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw std::invalid_argument("table '" + s.label + "' is not normalized (sum " + std::to_string(total) + ")");
    }
  }
  return by_label;
}

}  // namespace

std::string ElementRef::str(std::size_t nqubits) const {
  const std::string idx = bit_string(row, nqubits) + ";" + bit_string(col, nqubits);
  switch (part) {
    case ElementPart::Diag: return "rho_" + idx;
    case ElementPart::Re: return "Re rho_" + idx;
    case ElementPart::Im: return "Im rho_" + idx;
  }
  return idx;
}

const TomographyScheme& TomographyScheme::three_qubit() {
  static const TomographyScheme s = build_three_qubit();
  return s;
}

const TomographyScheme& TomographyScheme::two_qubit() {
  static const TomographyScheme s = build_two_qubit();
  return s;
}

const MeasurementSetting& TomographyScheme::setting(const std::string& label) const {
  for (const MeasurementSetting& s : settings) {
    if (s.label == label) return s;
  }
  throw MissingSettingError("scheme has no setting '" + label + "'");
}

std::vector<ExtractionRule> derive_rules(const TomographyScheme& scheme) {
  const std::size_t dim = std::size_t{1} << scheme.nqubits;
  std::vector<ExtractionRule> rules;
  for (const SettingGroup& group : scheme.groups) {
    std::vector<MeasurementOperator> ops;
    for (const std::string& label : group.labels) {
      auto more = measurement_operators(scheme.setting(label));
      ops.insert(ops.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    const std::size_t n = ops.size();
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) gram[a][b] = hs_inner(ops[a].op, ops[b].op);
    }
    const EigenSystem es = gram_spectrum(gram);

    for (const ElementRef& target : group.targets) {
      const ComplexMatrix o = target_operator(target, dim);
      std::vector<double> rhs(n);
      for (std::size_t a = 0; a < n; ++a) rhs[a] = hs_inner(ops[a].op, o);
      std::vector<double> c = spectral_solve(es, rhs, 1e-10);

      ExtractionRule rule{target, {}};
      ComplexMatrix check(dim, dim);
      for (std::size_t a = 0; a < n; ++a) {
        const double snapped = std::round(c[a] * 8.0) / 8.0;
        if (std::abs(snapped - c[a]) < 1e-9) c[a] = snapped;
        if (std::abs(c[a]) < 1e-12) continue;
        rule.terms.push_back({ops[a].label, ops[a].outcome, c[a]});
        check += cplx(c[a]) * ops[a].op;
      }
      const double err = max_abs_diff(check, o);
      if (err > 1e-10) {
        throw RuleDerivationError("settings of group '" + group.labels.front() + "' do not determine " +
                                  target.str(scheme.nqubits) + " (operator residual " + std::to_string(err) + ")");
      }
      rules.push_back(std::move(rule));
    }
  }
  return rules;
}

const std::vector<ExtractionRule>& rules_for(const TomographyScheme& scheme) {
  static std::once_flag once3, once2;
  static std::vector<ExtractionRule> rules3, rules2;
  if (&scheme == &TomographyScheme::three_qubit()) {
    std::call_once(once3, [] { rules3 = derive_rules(TomographyScheme::three_qubit()); });
    return rules3;
  }
  if (&scheme == &TomographyScheme::two_qubit()) {
    std::call_once(once2, [] { rules2 = derive_rules(TomographyScheme::two_qubit()); });
    return rules2;
  }
  throw std::invalid_argument("rules_for: only the built-in schemes are cached; call derive_rules");
}

DensityMatrix reconstruct(const TomographyScheme& scheme, std::span<const ProbTable> tables) {
  const auto by_label = index_tables(scheme, tables);
  const std::size_t dim = std::size_t{1} << scheme.nqubits;
  const std::vector<ExtractionRule>& rules =
      (&scheme == &TomographyScheme::three_qubit() || &scheme == &TomographyScheme::two_qubit()) ? rules_for(scheme)
                                                                                                 : derive_rules(scheme);
  ComplexMatrix rho(dim, dim);
  for (const ExtractionRule& rule : rules) {
    double value = 0.0;
    for (const ProbTerm& t : rule.terms) value += t.coeff * by_label.at(t.label)->probs[t.outcome];
    cplx& entry = rho(rule.element.row, rule.element.col);
    switch (rule.element.part) {
      case ElementPart::Diag: entry = value; break;
      case ElementPart::Re: entry.real(value); break;
      case ElementPart::Im: entry.imag(value); break;
    }
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r + 1; c < dim; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix reconstruct_3q(std::span<const ProbTable> tables) {
  return reconstruct(TomographyScheme::three_qubit(), tables);
}

DensityMatrix reconstruct_2q(std::span<const ProbTable> tables) {
  return reconstruct(TomographyScheme::two_qubit(), tables);
}

LsqResult lsq_reconstruct(const TomographyScheme& scheme, std::span<const ProbTable> tables) {
  const auto by_label = index_tables(scheme, tables);
  const std::size_t dim = std::size_t{1} << scheme.nqubits;
  const std::size_t last = dim - 1;

  // Affine parameterization rho = |last><last| + sum_k x_k B_k with traceless
  // B_k: diagonal differences, then Re and Im parts of the upper triangle.
  struct Param {
    ElementPart part;
    std::size_t a, b;
  };
  std::vector<Param> params;
  for (std::size_t a = 0; a < last; ++a) params.push_back({ElementPart::Diag, a, a});
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      params.push_back({ElementPart::Re, a, b});
      params.push_back({ElementPart::Im, a, b});
    }
  }
  const std::size_t np = params.size();

  std::vector<std::vector<double>> design;
  std::vector<double> target;
  for (const MeasurementSetting& s : scheme.settings) {
    const ComplexMatrix u = setting_unitary(s);
    const ProbTable& t = *by_label.at(s.label);
    for (std::size_t m = 0; m < dim; ++m) {
      std::vector<double> row(np);
      for (std::size_t k = 0; k < np; ++k) {
        const Param& p = params[k];
        const cplx z = u(m, p.a) * std::conj(u(m, p.b));
        switch (p.part) {
          case ElementPart::Diag: row[k] = std::norm(u(m, p.a)) - std::norm(u(m, last)); break;
          case ElementPart::Re: row[k] = 2.0 * z.real(); break;
          case ElementPart::Im: row[k] = -2.0 * z.imag(); break;
        }
      }
      design.push_back(std::move(row));
      target.push_back(t.probs[m] - std::norm(u(m, last)));
    }
  }

  std::vector<std::vector<double>> normal(np, std::vector<double>(np, 0.0));
  std::vector<double> rhs(np, 0.0);
  for (std::size_t r = 0; r < design.size(); ++r) {
    for (std::size_t i = 0; i < np; ++i) {
      rhs[i] += design[r][i] * target[r];
      for (std::size_t j = 0; j < np; ++j) normal[i][j] += design[r][i] * design[r][j];
    }
  }
  const EigenSystem es = gram_spectrum(normal);
  const double lmax = es.values.front();
  const double lmin = es.values.back();
  const double cond = lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity();
  if (!(lmin > 1e-12 * lmax)) {
    throw SingularSystemError("lsq_reconstruct: singular normal equations (condition number " + std::to_string(cond) + ")",
                              cond);
  }
  const std::vector<double> x = spectral_solve(es, rhs, 0.0);

  ComplexMatrix rho(dim, dim);
  rho(last, last) = 1.0;
  for (std::size_t k = 0; k < np; ++k) {
    const Param& p = params[k];
    switch (p.part) {
      case ElementPart::Diag:
        rho(p.a, p.a) += x[k];
        rho(last, last) -= x[k];
        break;
      case ElementPart::Re:
        rho(p.a, p.b) += x[k];
        rho(p.b, p.a) += x[k];
        break;
      case ElementPart::Im:
        rho(p.a, p.b) += cplx(0.0, x[k]);
        rho(p.b, p.a) -= cplx(0.0, x[k]);
        break;
    }
  }

  double sq = 0.0;
  for (std::size_t r = 0; r < design.size(); ++r) {
    double fit = 0.0;
    for (std::size_t k = 0; k < np; ++k) fit += design[r][k] * x[k];
    sq += (fit - target[r]) * (fit - target[r]);
  }
  return {DensityMatrix(std::move(rho)), std::sqrt(sq), cond};
}

}  // namespace wtomo
