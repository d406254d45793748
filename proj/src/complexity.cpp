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

#include "charcom/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace charcom {

ComplexityReport character_complexity(const FiniteGroup& g, const CharacterTable& t,
                                      ElementId u) {
  ComplexityReport report;
  report.element = u;
  report.class_index = g.class_of(u);
  report.group_order = g.order();
  const std::size_t k = t.num_irreps();
  report.per_irrep_terms.resize(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double term = std::norm(t.chi(i, report.class_index)) / static_cast<double>(t.dim(i));
    report.per_irrep_terms[i] = term;
    sum += term;
  }
  report.value = sum / static_cast<double>(g.order());
  return report;
}

double identity_complexity(const FiniteGroup& g, const CharacterTable& t) {
  long long dim_sum = 0;
  for (std::size_t i = 0; i < t.num_irreps(); ++i) dim_sum += t.dim(i);
  return static_cast<double>(dim_sum) / static_cast<double>(g.order());
}

TensorCheck tensor_complexity_check(const FiniteGroup& g1, const CharacterTable& t1,
                                    ElementId u1, const FiniteGroup& g2,
                                    const CharacterTable& t2, ElementId u2,
                                    std::size_t order_cap) {
  const FiniteGroup product = FiniteGroup::direct_product(g1, g2, order_cap);
  const CharacterTable product_table = CharacterTable::compute(product);
  const ElementId pair =
      static_cast<ElementId>(static_cast<std::size_t>(u1) * g2.order() + u2);

  TensorCheck check;
  check.lhs = character_complexity(product, product_table, pair).value;
  check.rhs = character_complexity(g1, t1, u1).value * character_complexity(g2, t2, u2).value;
  check.residual = std::fabs(check.lhs - check.rhs);
  return check;
}

CompositionCheck composition_bound_check(const FiniteGroup& g, const CharacterTable& t,
                                         ElementId u1, ElementId u2) {
  CompositionCheck check;
  check.value = character_complexity(g, t, g.multiply(u1, u2)).value;
  check.holds = check.value <= 1.0 + 1e-12;
  return check;
}

double abelian_multiplicativity_check(const FiniteGroup& g, const CharacterTable& t) {
  if (!g.is_abelian()) {
    throw Error(ErrorKind::kNotAbelian, "abelian_multiplicativity_check",
                "group of order " + std::to_string(g.order()) + " is not abelian");
  }
  const std::size_t n = g.order();
  std::vector<double> values(n);
  for (std::size_t u = 0; u < n; ++u) {
    values[u] = character_complexity(g, t, static_cast<ElementId>(u)).value;
  }
  double max_residual = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const double composed = values[g.multiply(static_cast<ElementId>(a),
                                                static_cast<ElementId>(b))];
      max_residual = std::max(max_residual, std::fabs(composed - values[a] * values[b]));
    }
  }
  return max_residual;
}

double hypersphere_radius(int n_qubits, double complexity) {
  if (n_qubits < 1) {
    throw Error(ErrorKind::kDomainError, "hypersphere_radius", "qubit count must be >= 1");
  }
  if (complexity < 0.0) {
    throw Error(ErrorKind::kDomainError, "hypersphere_radius",
                "complexity must be >= 0, got " + format_double(complexity, 12));
  }
  const double dim = std::exp2(static_cast<double>(n_qubits));
  return std::sqrt((dim - 1.0) / dim) * std::sqrt(1.0 - std::exp2(-complexity));
}

ComplexityProfile complexity_profile(const FiniteGroup& g, const CharacterTable& t) {
  ComplexityProfile profile;
  const std::size_t k = g.num_classes();
  profile.per_class.resize(k);
  profile.min = std::numeric_limits<double>::infinity();
  profile.max = -std::numeric_limits<double>::infinity();
  double weighted_sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double value = character_complexity(g, t, g.class_rep(c)).value;
    profile.per_class[c] = value;
    profile.min = std::min(profile.min, value);
    profile.max = std::max(profile.max, value);
    weighted_sum += value * static_cast<double>(g.class_size(c));
  }
  profile.mean = weighted_sum / static_cast<double>(g.order());
  return profile;
}

void ComplexityReport::write_json(std::ostream& out) const {
  out << "{\"group_order\":" << group_order << ",\"element_index\":" << element
      << ",\"class_index\":" << class_index << ",\"complexity\":"
      << format_double(value, 17) << ",\"per_irrep_terms\":[";
  for (std::size_t i = 0; i < per_irrep_terms.size(); ++i) {
    if (i) out << ",";
    out << format_double(per_irrep_terms[i], 17);
  }
  out << "]}\n";
}

}  // namespace charcom
