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

#include "charcom/group.hpp"

#include <algorithm>
#include <string>

namespace charcom {

namespace {

// Lookup in a fingerprint index with exact confirmation inside the bucket.
std::optional<ElementId> index_find(
    const std::unordered_map<std::uint64_t, std::vector<ElementId>>& index,
    const std::vector<CMatrix>& elements, const CMatrix& m) {
  auto it = index.find(matrix_fingerprint(m));
  if (it == index.end()) return std::nullopt;
  for (ElementId id : it->second) {
    if (frobenius_distance(elements[id], m) < kElementTol) return id;
  }
  return std::nullopt;
}

}  // namespace

FiniteGroup FiniteGroup::close(const std::vector<CMatrix>& generators,
                               const CloseOptions& opts) {
  if (generators.empty()) {
    throw Error(ErrorKind::kDimensionMismatch, "close_group", "empty generator list");
  }
  if (opts.order_cap < 1) {
    throw Error(ErrorKind::kGroupNotClosed, "close_group", "order_cap must be >= 1");
  }
  const Eigen::Index dim = generators.front().rows();
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const CMatrix& g = generators[j];
    if (g.rows() != dim || g.cols() != dim) {
      throw Error(ErrorKind::kDimensionMismatch, "close_group",
                  "generator " + std::to_string(j) + " is not " + std::to_string(dim) +
                      "x" + std::to_string(dim));
    }
    if (!is_unitary(g, kElementTol)) {
      throw Error(ErrorKind::kNotUnitary, "close_group",
                  "generator " + std::to_string(j) + " fails U^dag U = I at 1e-9");
    }
  }

  FiniteGroup group;
  group.dim_ = dim;
  group.generators_ = generators;
  group.elements_.push_back(CMatrix::Identity(dim, dim));
  group.index_[matrix_fingerprint(group.elements_[0])].push_back(0);

  const std::size_t ngen = generators.size();
  // parent/via record how each element was first reached:
  // matrix(b) = matrix(parent[b]) * generators[via[b]]  for b > 0.
  std::vector<ElementId> parent(1, 0);
  std::vector<std::uint32_t> via(1, 0);
  // gentab[x][j] = id of matrix(x) * generators[j]
  std::vector<ElementId> gentab;

  for (std::size_t x = 0; x < group.elements_.size(); ++x) {
    for (std::size_t j = 0; j < ngen; ++j) {
      CMatrix product = group.elements_[x] * generators[j];
      auto found = index_find(group.index_, group.elements_, product);
      ElementId id;
      if (found) {
        id = *found;
      } else {
        if (group.elements_.size() >= opts.order_cap) {
          throw Error(ErrorKind::kGroupNotClosed, "close_group",
                      "closure exceeds order_cap=" + std::to_string(opts.order_cap) +
                          " (group is infinite or larger than the cap)");
        }
        id = static_cast<ElementId>(group.elements_.size());
        group.elements_.push_back(std::move(product));
        group.index_[matrix_fingerprint(group.elements_[id])].push_back(id);
        parent.push_back(static_cast<ElementId>(x));
        via.push_back(static_cast<std::uint32_t>(j));
      }
      gentab.push_back(id);
      // gentab is appended in (x, j) order; resize happens implicitly.
    }
  }

  // Cayley table. For b reached as parent*gen, a*b = (a*parent)*gen, so each
  // column is derived from an earlier one with a single gentab lookup. This
  // avoids |G|^2 matrix products; consistency with the matrices is checked by
  // the test suite on random pairs.
  const std::size_t n = group.elements_.size();
  group.cayley_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) group.cayley_[a * n + 0] = static_cast<ElementId>(a);
  for (std::size_t b = 1; b < n; ++b) {
    const std::size_t p = parent[b];
    const std::size_t j = via[b];
    for (std::size_t a = 0; a < n; ++a) {
      const ElementId ap = group.cayley_[a * n + p];
      group.cayley_[a * n + b] = gentab[static_cast<std::size_t>(ap) * ngen + j];
    }
  }

  group.compute_inverses();
  group.compute_classes();

  if (opts.projective) return group.projective_quotient(opts.order_cap);
  return group;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                        std::size_t order_cap) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const std::size_t n = n1 * n2;
  if (n > order_cap) {
    throw Error(ErrorKind::kGroupNotClosed, "direct_product",
                "product order " + std::to_string(n) + " exceeds order_cap=" +
                    std::to_string(order_cap));
  }

  FiniteGroup group;
  group.dim_ = g1.dim() * g2.dim();
  group.projective_ = g1.projective() || g2.projective();
  group.elements_.reserve(n);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      group.elements_.push_back(kron(g1.matrix(static_cast<ElementId>(a)),
                                     g2.matrix(static_cast<ElementId>(b))));

  const CMatrix i1 = CMatrix::Identity(g1.dim(), g1.dim());
  const CMatrix i2 = CMatrix::Identity(g2.dim(), g2.dim());
  for (const CMatrix& g : g1.generators()) group.generators_.push_back(kron(g, i2));
  for (const CMatrix& g : g2.generators()) group.generators_.push_back(kron(i1, g));

  group.cayley_.assign(n * n, 0);
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t b1 = 0; b1 < n2; ++b1)
      for (std::size_t a2 = 0; a2 < n1; ++a2)
        for (std::size_t b2 = 0; b2 < n2; ++b2) {
          const std::size_t lhs = a1 * n2 + b1;
          const std::size_t rhs = a2 * n2 + b2;
          const std::size_t prod =
              g1.multiply(static_cast<ElementId>(a1), static_cast<ElementId>(a2)) * n2 +
              g2.multiply(static_cast<ElementId>(b1), static_cast<ElementId>(b2));
          group.cayley_[lhs * n + rhs] = static_cast<ElementId>(prod);
        }

  group.build_index();
  group.compute_inverses();
  group.compute_classes();
  return group;
}

void FiniteGroup::build_index() {
  index_.clear();
  for (ElementId id = 0; id < elements_.size(); ++id) {
    index_[matrix_fingerprint(elements_[id])].push_back(id);
  }
}

void FiniteGroup::compute_inverses() {
  const std::size_t n = order();
  inverses_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (cayley_[a * n + b] == 0) {
        inverses_[a] = static_cast<ElementId>(b);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kGroupNotClosed, "close_group",
                  "element " + std::to_string(a) + " has no inverse; table corrupt");
    }
  }
}

void FiniteGroup::compute_classes() {
  const std::size_t n = order();
  classes_.clear();
  class_of_.assign(n, 0);
  std::vector<bool> assigned(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::vector<ElementId> members;
    for (std::size_t h = 0; h < n; ++h) {
      ElementId x = multiply(multiply(static_cast<ElementId>(h), static_cast<ElementId>(a)),
                             inverse(static_cast<ElementId>(h)));
      if (!assigned[x]) {
        assigned[x] = true;
        members.push_back(x);
      }
    }
    std::sort(members.begin(), members.end());
    const auto cls = static_cast<std::uint32_t>(classes_.size());
    for (ElementId m : members) class_of_[m] = cls;
    classes_.push_back(std::move(members));
  }
}

FiniteGroup FiniteGroup::projective_quotient(std::size_t order_cap) const {
  const std::size_t n = order();
  // Scalar subgroup: elements within tolerance of lambda * I.
  std::vector<ElementId> scalars;
  for (ElementId a = 0; a < n; ++a) {
    const CMatrix& m = elements_[a];
    if (frobenius_distance(m, m(0, 0) * CMatrix::Identity(dim_, dim_)) <
        kElementTol * std::sqrt(static_cast<double>(dim_))) {
      scalars.push_back(a);
    }
  }

  // Coset representative: smallest index in {z * a : z scalar}.
  std::vector<ElementId> rep(n);
  for (std::size_t a = 0; a < n; ++a) {
    ElementId best = static_cast<ElementId>(a);
    for (ElementId z : scalars) best = std::min(best, multiply(z, static_cast<ElementId>(a)));
    rep[a] = best;
  }

  std::vector<ElementId> reps;
  std::vector<ElementId> rep_to_new(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (rep[a] == a) {
      rep_to_new[a] = static_cast<ElementId>(reps.size());
      reps.push_back(static_cast<ElementId>(a));
    }
  }

  FiniteGroup quotient;
  quotient.dim_ = dim_;
  quotient.projective_ = true;
  quotient.generators_ = generators_;
  const std::size_t q = reps.size();
  if (q > order_cap) {
    throw Error(ErrorKind::kGroupNotClosed, "close_group",
                "projective quotient order exceeds order_cap");
  }
  quotient.elements_.reserve(q);
  for (ElementId r : reps) quotient.elements_.push_back(elements_[r]);
  quotient.cayley_.assign(q * q, 0);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      quotient.cayley_[a * q + b] = rep_to_new[rep[multiply(reps[a], reps[b])]];

  quotient.build_index();
  quotient.compute_inverses();
  quotient.compute_classes();
  return quotient;
}

std::size_t FiniteGroup::centralizer_order(ElementId a) const {
  const std::size_t n = order();
  std::size_t count = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (multiply(multiply(static_cast<ElementId>(h), a), inverse(static_cast<ElementId>(h))) == a)
      ++count;
  }
  return count;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (cayley_[a * n + b] != cayley_[b * n + a]) return false;
  return true;
}

std::optional<ElementId> FiniteGroup::find_element(const CMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  return index_find(index_, elements_, m);
}

ElementId FiniteGroup::require_element(const CMatrix& m, const std::string& operation) const {
  auto found = find_element(m);
  if (!found) {
    throw Error(ErrorKind::kElementNotFound, operation,
                "matrix is not an element of the group (order " + std::to_string(order()) + ")");
  }
  return *found;
}

namespace {

void write_matrix_json(std::ostream& out, const CMatrix& m) {
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out << ",";
    out << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ",";
      out << "[" << format_double(m(i, j).real(), 17) << ","
          << format_double(m(i, j).imag(), 17) << "]";
    }
    out << "]";
  }
  out << "]";
}

}  // namespace

void FiniteGroup::dump_json(std::ostream& out) const {
  out << "{\"order\":" << order() << ",\"dim\":" << dim_ << ",\"classes\":[";
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c) out << ",";
    out << "[";
    for (std::size_t i = 0; i < classes_[c].size(); ++i) {
      if (i) out << ",";
      out << classes_[c][i];
    }
    out << "]";
  }
  out << "],\"generators_used\":[";
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (j) out << ",";
    write_matrix_json(out, generators_[j]);
  }
  out << "]}\n";
}

}  // namespace charcom
