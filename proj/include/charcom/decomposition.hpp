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

#ifndef CHARCOM_DECOMPOSITION_HPP_
#define CHARCOM_DECOMPOSITION_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "charcom/character_table.hpp"
#include "charcom/group.hpp"
#include "charcom/linalg.hpp"

namespace charcom {

struct StateVector {
  CVector amplitudes;

  Eigen::Index dim() const { return amplitudes.size(); }

  // |index> in the 2^n_qubits computational basis.
  static StateVector basis_state(int n_qubits, std::size_t index);

  // Validates sum |a|^2 = 1 within 1e-10.
  static StateVector from_vector(CVector v);
};

// Irreps whose complexity term |chi_i(u)|^2 / d_i clears the threshold.
// The default threshold is 1 / (n^2 |G|).
struct SignificantSet {
  std::vector<std::size_t> indices;  // ascending
  double threshold = 0.0;
  int n_qubits = 0;

  bool contains(std::size_t i) const;
};

SignificantSet significant_set(const CharacterTable& t, ElementId u, int n_qubits,
                               std::optional<double> threshold_override = std::nullopt);

// Isotypic projectors of the natural (defining) representation:
// P_i = (d_i/|G|) sum_g conj(chi_i(g)) rho(g). Idempotent, self-adjoint,
// mutually orthogonal, summing to the identity.
std::vector<CMatrix> natural_isotypic_projectors(const FiniteGroup& g,
                                                 const CharacterTable& t);

enum class DecompMode {
  // Terms T_i = (chi_i(u)/d_i) sum_g chi_i(g^-1) rho(g), the printed sum.
  // Its inner sum collapses to a multiple of P_i by Schur orthogonality, so
  // the terms generally do NOT add up to rho(u); the residual reports by
  // how much.
  kVerbatimEq3,
  // Terms T_i = rho(u) P_i; with the full index set these reconstruct
  // rho(u) exactly.
  kIsotypic,
};

const char* decomp_mode_name(DecompMode mode);
std::optional<DecompMode> decomp_mode_from_name(const std::string& name);

struct DecompositionComponents {
  DecompMode mode = DecompMode::kIsotypic;
  std::vector<std::size_t> irreps;  // retained irrep indices
  std::vector<CMatrix> terms;       // one matrix per retained irrep
  double residual = 0.0;            // || sum terms - rho(u) ||_F
};

// Full index set when `s` is null.
DecompositionComponents decompose(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                                  DecompMode mode, const SignificantSet* s = nullptr);

struct MeasurementResult {
  double value = 0.0;          // Re <psi| U~^dag A U~ |psi>
  double imag_residual = 0.0;  // |Im ...|, numerical noise for self-adjoint A
};

// Throws kNotSelfAdjoint if ||A - A^dag|| > 1e-10.
MeasurementResult simulate_measurement(const FiniteGroup& g, const CharacterTable& t,
                                       ElementId u, const CMatrix& observable,
                                       const StateVector& psi, const SignificantSet& s,
                                       DecompMode mode);

// Tr(U~^dag A U~ rho). Throws kInvalidDensityMatrix unless rho is
// self-adjoint, positive semidefinite and has unit trace within 1e-9.
double expectation_value(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                         const CMatrix& observable, const CMatrix& rho_initial,
                         const SignificantSet& s, DecompMode mode);

struct ApproxState {
  CVector amplitudes;  // U~ |psi>, not renormalized
  double l2_error = 0.0;  // || U~ psi - U psi ||_2 against the dense oracle
};

ApproxState approx_state(const FiniteGroup& g, const CharacterTable& t, ElementId u,
                         const StateVector& psi, const SignificantSet& s, DecompMode mode);

// Verification oracle: plain dense matrix-vector product.
StateVector dense_oracle_apply(const CMatrix& u_matrix, const StateVector& psi);

struct TruncationRow {
  double threshold = 0.0;
  std::size_t set_size = 0;
  double l2_error = 0.0;
};

// Isotypic-mode truncation sweep; rows sorted by threshold. |S| is
// non-increasing and the error non-decreasing in the threshold.
std::vector<TruncationRow> truncation_study(const FiniteGroup& g, const CharacterTable& t,
                                            ElementId u, const StateVector& psi,
                                            std::vector<double> thresholds);

// CSV "threshold,set_size,l2_error", 12 significant digits.
void write_truncation_csv(const std::vector<TruncationRow>& rows, std::ostream& out);

}  // namespace charcom

#endif  // CHARCOM_DECOMPOSITION_HPP_
