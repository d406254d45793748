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

#ifndef CHARCOM_CIRCUITS_HPP_
#define CHARCOM_CIRCUITS_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "charcom/group.hpp"
#include "charcom/linalg.hpp"

namespace charcom {

// Phase levels are dyadic: T_k = diag(1, e^{2 pi i / 2^k}) and CPHASE_k is
// its controlled version, so T_1 = Z, T_2 = S and T_3 is the textbook T gate.
// Level 0 is the zero-angle gate (phase 2 pi).
enum class GateKind { kI, kX, kY, kZ, kH, kS, kT, kCnot, kCz, kSwap, kCphase };

// Maximum circuit width for dense 2^n x 2^n compilation.
inline constexpr int kMaxQubits = 12;

int gate_arity(GateKind kind);
bool gate_has_phase_level(GateKind kind);
const char* gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(const std::string& name);

// Base (unembedded) gate matrix, 2x2 or 4x4. For two-qubit gates the first
// target is the high bit of the gate index; CNOT targets are
// [control, target].
CMatrix gate_matrix(GateKind kind, int k = 0);

struct Gate {
  GateKind kind = GateKind::kI;
  std::vector<int> targets;
  int k = 0;  // phase level, only meaningful for T / CPHASE
};

struct Circuit {
  int n = 1;
  std::vector<Gate> gates;
  std::string family_tag = "custom";  // random | qft | qaoa | custom
  std::optional<std::uint64_t> seed;
};

// Gate embedded into the full 2^n space. Qubit 0 is the most significant
// tensor factor throughout.
CMatrix embed_gate(const Gate& gate, int n);

// U = U_m ... U_2 U_1 (rightmost factor is the first gate applied).
// Throws kWidthExceeded for n > 12.
CMatrix compile_circuit(const Circuit& circuit);

// Standard QFT ladder: H plus CPHASE_k with k = distance + 1, clamped to
// k <= max_phase_level (larger-k gates are omitted), final qubit-reversal
// SWAPs. With max_phase_level >= n this compiles to the exact 2^n-point DFT.
Circuit qft_circuit(int n, int max_phase_level);

// p alternating layers. Per edge (a, b): CNOT(a->b), T_gamma on b,
// CNOT(a->b); then per qubit the X-basis mixer H, T_beta, H. One gamma and
// one beta level per layer.
Circuit qaoa_circuit(int n, int layers, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<int>& gamma_levels,
                     const std::vector<int>& beta_levels);

// A gate type with its phase level; what random circuits draw from.
struct GateSpec {
  GateKind kind = GateKind::kI;
  int k = 0;
};

// `gate_count` gates drawn i.i.d. uniformly over all (gate type, valid
// target tuple) combinations; two-qubit tuples are ordered pairs enumerated
// lexicographically. Gate j is drawn from SplitMix64(sub_seed(seed, j)), so
// the circuit is a pure function of (n, gate_count, seed, gate_set).
Circuit random_circuit(int n, int gate_count, std::uint64_t seed,
                       const std::vector<GateSpec>& gate_set);

// Every distinct embedding of every gate in the set at width n (identity
// embeddings deduplicated).
std::vector<CMatrix> embedded_gate_set(const std::vector<GateSpec>& gate_set, int n);

// The distinct embedded gate matrices appearing in the circuit, in first-use
// order; the identity for an empty circuit. This is the generating set of
// circuit_group.
std::vector<CMatrix> distinct_embedded_gates(const Circuit& circuit);

struct CircuitGroup {
  FiniteGroup group;
  ElementId element;  // the compiled circuit located inside the group
};

// Closes the group generated by the distinct embedded gate matrices of the
// circuit and locates the compiled unitary among its elements.
// Throws kGroupNotClosed (e.g. H plus T_3 generates an infinite group) and
// kElementNotFound (tolerance breach; indicates a bug).
CircuitGroup circuit_group(const Circuit& circuit, std::size_t order_cap = kDefaultOrderCap);

// JSON lines: header {n, family_tag, seed?}, then one gate per line
// {name, targets[], k?}.
void write_circuit_jsonl(const Circuit& circuit, std::ostream& out);
Circuit read_circuit_jsonl(std::istream& in);

}  // namespace charcom

#endif  // CHARCOM_CIRCUITS_HPP_
