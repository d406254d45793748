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

#ifndef CHARCOM_IRREP_HPP_
#define CHARCOM_IRREP_HPP_

#include <cstddef>
#include <vector>

#include "charcom/character_table.hpp"
#include "charcom/group.hpp"
#include "charcom/linalg.hpp"

namespace charcom {

// An explicit irreducible representation: one d x d unitary per element,
// verified to be a homomorphism with the right traces before being returned.
struct Irrep {
  std::size_t index = 0;
  int dim = 0;
  std::vector<CMatrix> images;  // per ElementId
};

// Realizes irrep `irrep_index` inside the regular representation: the central
// idempotent E_i carves out the isotypic block, and a deterministic random
// self-adjoint commutant element splits its d_i-fold multiplicity.
// Throws kMemoryBudgetExceeded for groups whose regular representation does
// not fit, kBlockSplitFailed if 8 reseeds cannot split the block cleanly.
Irrep explicit_irrep(const FiniteGroup& g, const CharacterTable& t, std::size_t irrep_index);

// Multiplicity of each irrep in the group's defining (natural) matrix
// representation, m_i = (1/|G|) sum_g trace(g) conj(chi_i(g)). Each value
// must be within 1e-6 of a non-negative integer and the multiplicities must
// add up to the matrix dimension; otherwise kNonIntegralMultiplicity.
std::vector<int> natural_multiplicities(const FiniteGroup& g, const CharacterTable& t);

}  // namespace charcom

#endif  // CHARCOM_IRREP_HPP_
