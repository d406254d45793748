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

#include "charcom/builtin_groups.hpp"

#include "charcom/errors.hpp"

namespace charcom {

namespace {

CMatrix permutation_3(int image0, int image1, int image2) {
  CMatrix m = CMatrix::Zero(3, 3);
  m(image0, 0) = 1.0;
  m(image1, 1) = 1.0;
  m(image2, 2) = 1.0;
  return m;
}

}  // namespace

std::vector<std::string> builtin_group_names() {
  return {"z2", "z8", "s3", "pauli1", "pauli2", "clifford1", "cnot_phase2"};
}

std::vector<CMatrix> builtin_group_generators(const std::string& name) {
  if (name == "z2") {
    return {gate_matrix(GateKind::kZ)};
  }
  if (name == "z8") {
    // diag(1, e^{i pi/4})
    return {gate_matrix(GateKind::kT, 3)};
  }
  if (name == "s3") {
    // transposition (0 1) and 3-cycle (0 1 2) as permutation matrices
    return {permutation_3(1, 0, 2), permutation_3(1, 2, 0)};
  }
  if (name == "pauli1") {
    // All three Paulis: X Y = i Z brings in the scalar i, so the closure is
    // the full order-16 Pauli group with center {I, iI, -I, -iI}.
    return {gate_matrix(GateKind::kX), gate_matrix(GateKind::kY), gate_matrix(GateKind::kZ)};
  }
  if (name == "pauli2") {
    return embedded_gate_set({{GateKind::kX, 0}, {GateKind::kY, 0}, {GateKind::kZ, 0}}, 2);
  }
  if (name == "clifford1") {
    return {gate_matrix(GateKind::kH), gate_matrix(GateKind::kS)};
  }
  if (name == "cnot_phase2") {
    return embedded_gate_set({{GateKind::kCnot, 0}, {GateKind::kS, 0}}, 2);
  }
  throw Error(ErrorKind::kConfigError, "builtin_group",
              "unknown group \"" + name + "\" (try z2, z8, s3, pauli1, pauli2, clifford1, "
              "cnot_phase2)");
}

std::vector<std::string> builtin_gate_set_names() {
  return {"xz", "paulis", "xzcnot", "hs", "hscnot", "cnot_phase2"};
}

std::vector<GateSpec> builtin_gate_set(const std::string& name) {
  if (name == "xz") return {{GateKind::kX, 0}, {GateKind::kZ, 0}};
  if (name == "paulis") return {{GateKind::kX, 0}, {GateKind::kY, 0}, {GateKind::kZ, 0}};
  if (name == "xzcnot") return {{GateKind::kX, 0}, {GateKind::kZ, 0}, {GateKind::kCnot, 0}};
  if (name == "hs") return {{GateKind::kH, 0}, {GateKind::kS, 0}};
  if (name == "hscnot") return {{GateKind::kH, 0}, {GateKind::kS, 0}, {GateKind::kCnot, 0}};
  if (name == "cnot_phase2") return {{GateKind::kCnot, 0}, {GateKind::kS, 0}};
  throw Error(ErrorKind::kConfigError, "builtin_gate_set",
              "unknown gate set \"" + name + "\" (try xz, paulis, xzcnot, hs, hscnot, "
              "cnot_phase2)");
}

}  // namespace charcom
