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

#ifndef CHARCOM_BUILTIN_GROUPS_HPP_
#define CHARCOM_BUILTIN_GROUPS_HPP_

#include <string>
#include <vector>

#include "charcom/circuits.hpp"
#include "charcom/linalg.hpp"

namespace charcom {

// Named generator sets that provably close at desk scale:
// z2, z8, s3, pauli1, pauli2, clifford1, cnot_phase2.
std::vector<std::string> builtin_group_names();
std::vector<CMatrix> builtin_group_generators(const std::string& name);

// Named qubit gate sets for circuit families: xz, paulis, xzcnot, hs,
// hscnot, cnot_phase2.
std::vector<std::string> builtin_gate_set_names();
std::vector<GateSpec> builtin_gate_set(const std::string& name);

}  // namespace charcom

#endif  // CHARCOM_BUILTIN_GROUPS_HPP_
