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

#ifndef CHARCOM_COMPLEXITY_HPP_
#define CHARCOM_COMPLEXITY_HPP_

#include <cstddef>
#include <ostream>
#include <vector>

#include "charcom/character_table.hpp"
#include "charcom/group.hpp"

namespace charcom {

// Character complexity of one element:
// value = (1/|G|) sum_i |chi_i(u)|^2 / d_i, always in [0, 1].
struct ComplexityReport {
  ElementId element = 0;
  std::size_t class_index = 0;
  double value = 0.0;
  std::vector<double> per_irrep_terms;  // |chi_i(u)|^2 / d_i
  std::size_t group_order = 0;

  // {group_order, element_index, class_index, complexity, per_irrep_terms[]}
  void write_json(std::ostream& out) const;
};

ComplexityReport character_complexity(const FiniteGroup& g, const CharacterTable& t,
                                      ElementId u);

// (sum_i d_i) / |G|; the maximum of the complexity, attained at the identity.
double identity_complexity(const FiniteGroup& g, const CharacterTable& t);

struct TensorCheck {
  double lhs = 0.0;       // C(u1 (x) u2) over the direct product group
  double rhs = 0.0;       // C(u1) * C(u2)
  double residual = 0.0;  // |lhs - rhs|
};

// Multiplicativity of the complexity under tensor products, evaluated on the
// direct product group with its own character table.
TensorCheck tensor_complexity_check(const FiniteGroup& g1, const CharacterTable& t1,
                                    ElementId u1, const FiniteGroup& g2,
                                    const CharacterTable& t2, ElementId u2,
                                    std::size_t order_cap = kDefaultOrderCap);

struct CompositionCheck {
  double value = 0.0;  // C(u1 u2)
  bool holds = false;  // value <= 1 + 1e-12
};

CompositionCheck composition_bound_check(const FiniteGroup& g, const CharacterTable& t,
                                         ElementId u1, ElementId u2);

// max over all pairs of |C(u1 u2) - C(u1) C(u2)|; throws kNotAbelian if the
// group is not abelian.
double abelian_multiplicativity_check(const FiniteGroup& g, const CharacterTable& t);

// r = sqrt((2^n - 1) / 2^n) * sqrt(1 - 2^-c). Accepts any c >= 0; throws
// kDomainError for c < 0.
double hypersphere_radius(int n_qubits, double complexity);

struct ComplexityProfile {
  std::vector<double> per_class;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;  // weighted by class size
};

// The complexity is a class function; one value per conjugacy class.
ComplexityProfile complexity_profile(const FiniteGroup& g, const CharacterTable& t);

}  // namespace charcom

#endif  // CHARCOM_COMPLEXITY_HPP_
