// Copyright 2026 The charcom Authors
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

#include "charcom/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace charcom {

StateVector StateVector::basis_state(int n_qubits, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw Error(ErrorKind::kDomainError, "state_vector",
                "basis index " + std::to_string(index) + " outside dimension " +
                    std::to_string(dim));
  }
  StateVector psi;
  psi.amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim));
  psi.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
  return psi;
}

StateVector StateVector::from_vector(CVector v) {
  if (std::fabs(v.squaredNorm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::kDomainError, "state_vector",
                "squared norm " + format_double(v.squaredNorm(), 12) + " is not 1 within 1e-10");
  }
  StateVector psi;
  psi.amplitudes = std::move(v);
  return psi;
}

bool SignificantSet::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

SignificantSet significant_set(const CharacterTable& t, ElementId u, int n_qubits,
                               std::optional<double> threshold_override) {
  if (n_qubits < 1) {
    throw Error(ErrorKind::kDomainError, "significant_set", "qubit count must be >= 1");
  }
  SignificantSet s;
  s.n_qubits = n_qubits;
  s.threshold = threshold_override.value_or(
      1.0 / (static_cast<double>(n_qubits) * static_cast<double>(n_qubits) *
             static_cast<double>(t.group_order())));
  const std::size_t cls = t.group()->class_of(u);
  for (std::size_t i = 0; i < t.num_irreps(); ++i) {
    const double term = std::norm(t.chi(i, cls)) / static_cast<double>(t.dim(i));
    if (term >= s.threshold) s.indices.push_back(i);
  }
  return s;
}

namespace {

// Per-class sums of the natural matrices; both projector formulas consume
// these instead of iterating over all |G| elements per irrep.
std::vector<CMatrix> class_matrix_sums(const FiniteGroup& g) {
  const auto dim = g.dim();
  std::vector<CMatrix> sums(g.num_classes(), CMatrix::Zero(dim, dim));
  for (ElementId a = 0; a < g.order(); ++a) {
    sums[g.class_of(a)] += g.matrix(a);
  }
  return sums;
}

std::vector<std::size_t> all_irreps(const CharacterTable& t) {
  std::vector<std::size_t> indices(t.num_irreps());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  return indices;
}

void check_self_adjoint(const CMatrix& a, const char* operation) {
  if ((a - a.adjoint()).norm() > 1e-10) {
    throw Error(ErrorKind::kNotSelfAdjoint, operation,
                "observable is not self-adjoint within 1e-10");
  }
}

}  // namespace

std::vector<CMatrix> natural_isotypic_projectors(const FiniteGroup& g,
                                                 const CharacterTable& t) {
  const auto class_sums = class_matrix_sums(g);
  const auto order = static_cast<double>(g.order());
  const std::size_t k = t.num_irreps();
  std::vector<CMatrix> projectors(k);
  for (std::size_t i = 0; i < k; ++i) {
    CMatrix p = CMatrix::Zero(g.dim(), g.dim());
    for (std::size_t c = 0; c < k; ++c) {
      p += std::conj(t.chi(i, c)) * class_sums[c];
    }
    projectors[i] = (static_cast<double>(t.dim(i)) / order) * p;
  }
  return projectors;
}

DecompositionComponents decompose(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                                  DecompMode mode, const SignificantSet* s) {
  DecompositionComponents components;
  components.mode = mode;
  components.irreps = s ? s->indices : all_irreps(t);

  const std::size_t cls = g.class_of(u);
  const CMatrix& target = g.matrix(u);
  components.terms.reserve(components.irreps.size());

  if (mode == DecompMode::kIsotypic) {
    const auto projectors = natural_isotypic_projectors(g, t);
    for (std::size_t i : components.irreps) {
      components.terms.push_back(target * projectors[i]);
    }
  } else {
    const auto class_sums = class_matrix_sums(g);
    for (std::size_t i : components.irreps) {
      // (chi_i(u)/d_i) sum_g chi_i(g^-1) rho(g), the sum taken class-wise
      // since chi(g^-1) is a class function.
      CMatrix inner = CMatrix::Zero(g.dim(), g.dim());
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        const std::size_t inv_cls = g.class_of(g.inverse(g.class_rep(c)));
        inner += t.chi(i, inv_cls) * class_sums[c];
      }
      components.terms.push_back((t.chi(i, cls) / static_cast<double>(t.dim(i))) * inner);
    }
  }

  CMatrix sum = CMatrix::Zero(g.dim(), g.dim());
  for (const CMatrix& term : components.terms) sum += term;
  components.residual = frobenius_distance(sum, target);
  return components;
}

namespace {

CMatrix truncated_operator(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                           const SignificantSet& s, DecompMode mode) {
  const DecompositionComponents components = decompose(g, t, u, mode, &s);
  CMatrix sum = CMatrix::Zero(g.dim(), g.dim());
  for (const CMatrix& term : components.terms) sum += term;
  return sum;
}

}  // namespace

MeasurementResult simulate_measurement(const FiniteGroup& g, const CharacterTable& t,
                                       ElementId u, const CMatrix& observable,
                                       const StateVector& psi, const SignificantSet& s,
                                       DecompMode mode) {
  check_self_adjoint(observable, "simulate_measurement");
  if (observable.rows() != g.dim() || psi.dim() != g.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "simulate_measurement",
                "observable/state dimension differs from the group dimension");
  }
  const CMatrix op = truncated_operator(g, t, u, s, mode);
  const CVector phi = op * psi.amplitudes;
  const Complex value = phi.dot(observable * phi);  // Eigen dot conjugates the left side
  return {value.real(), std::fabs(value.imag())};
}

double expectation_value(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                         const CMatrix& observable, const CMatrix& rho_initial,
                         const SignificantSet& s, DecompMode mode) {
  check_self_adjoint(observable, "expectation_value");
  if (rho_initial.rows() != g.dim() || rho_initial.cols() != g.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "expectation_value",
                "density matrix dimension differs from the group dimension");
  }
  if ((rho_initial - rho_initial.adjoint()).norm() > 1e-9 ||
      std::abs(rho_initial.trace() - Complex(1.0, 0.0)) > 1e-9) {
    throw Error(ErrorKind::kInvalidDensityMatrix, "expectation_value",
                "density matrix must be self-adjoint with unit trace");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (rho_initial + rho_initial.adjoint()));
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() < -1e-9) {
    throw Error(ErrorKind::kInvalidDensityMatrix, "expectation_value",
                "density matrix is not positive semidefinite");
  }
  const CMatrix op = truncated_operator(g, t, u, s, mode);
  return (op.adjoint() * observable * op * rho_initial).trace().real();
}

ApproxState approx_state(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                         const StateVector& psi, const SignificantSet& s, DecompMode mode) {
  if (psi.dim() != g.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "approx_state",
                "state dimension differs from the group dimension");
  }
  const CMatrix op = truncated_operator(g, t, u, s, mode);
  ApproxState result;
  result.amplitudes = op * psi.amplitudes;
  result.l2_error = (result.amplitudes - g.matrix(u) * psi.amplitudes).norm();
  return result;
}

StateVector dense_oracle_apply(const CMatrix& u_matrix, const StateVector& psi) {
  if (u_matrix.cols() != psi.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "dense_oracle_apply",
                "matrix is " + std::to_string(u_matrix.rows()) + "x" +
                    std::to_string(u_matrix.cols()) + ", state has dimension " +
                    std::to_string(psi.dim()));
  }
  StateVector out;
  out.amplitudes = u_matrix * psi.amplitudes;
  return out;
}

std::vector<TruncationRow> truncation_study(const FiniteGroup& g, const CharacterTable& t,
                                            ElementId u, const StateVector& psi,
                                            std::vector<double> thresholds) {
  if (psi.dim() != g.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "truncation_study",
                "state dimension differs from the group dimension");
  }
  std::sort(thresholds.begin(), thresholds.end());

  // chi is a class function, so each row only reselects among the same
  // per-irrep component vectors rho(u) P_i psi (mutually orthogonal).
  const auto projectors = natural_isotypic_projectors(g, t);
  const std::size_t cls = g.class_of(u);
  std::vector<CVector> component(projectors.size());
  std::vector<double> term(projectors.size());
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    component[i] = g.matrix(u) * (projectors[i] * psi.amplitudes);
    term[i] = std::norm(t.chi(i, cls)) / static_cast<double>(t.dim(i));
  }
  const CVector oracle = g.matrix(u) * psi.amplitudes;

  std::vector<TruncationRow> rows;
  rows.reserve(thresholds.size());
  for (double threshold : thresholds) {
    CVector sum = CVector::Zero(g.dim());
    std::size_t retained = 0;
    for (std::size_t i = 0; i < component.size(); ++i) {
      if (term[i] >= threshold) {
        sum += component[i];
        ++retained;
      }
    }
    rows.push_back({threshold, retained, (sum - oracle).norm()});
  }
  return rows;
}

void write_truncation_csv(const std::vector<TruncationRow>& rows, std::ostream& out) {
  out << "threshold,set_size,l2_error\n";
  for (const TruncationRow& row : rows) {
    out << format_double(row.threshold, 12) << "," << row.set_size << ","
        << format_double(row.l2_error, 12) << "\n";
  }
}

const char* decomp_mode_name(DecompMode mode) {
  return mode == DecompMode::kIsotypic ? "isotypic" : "verbatim-eq3";
}

std::optional<DecompMode> decomp_mode_from_name(const std::string& name) {
  if (name == "isotypic") return DecompMode::kIsotypic;
  if (name == "verbatim-eq3") return DecompMode::kVerbatimEq3;
  return std::nullopt;
}

}  // namespace charcom
