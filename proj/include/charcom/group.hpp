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

#ifndef CHARCOM_GROUP_HPP_
#define CHARCOM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "charcom/errors.hpp"
#include "charcom/linalg.hpp"

namespace charcom {

// Index into FiniteGroup::matrix(). The identity is always element 0.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 20'000;

// Frobenius tolerance for element equality and unitarity checks.
inline constexpr double kElementTol = 1e-9;

struct CloseOptions {
  std::size_t order_cap = kDefaultOrderCap;
  // Quotient by the scalar subgroup {lambda * I} detected after closure.
  // In this mode element matrices are coset representatives, so products of
  // matrices match table entries only up to a scalar phase.
  bool projective = false;
};

// A finite group of unitary matrices, built by breadth-first closure of a
// generating set. Immutable once constructed; safe to share across threads.
//
// Element numbering is deterministic: identity first, then discovery order.
// Conjugacy classes are numbered by their smallest member.
class FiniteGroup {
 public:
  // Breadth-first closure of `generators` under matrix multiplication.
  // Throws: kNotUnitary, kDimensionMismatch, kGroupNotClosed (closure would
  // exceed opts.order_cap, i.e. the generated group is infinite or too big).
  static FiniteGroup close(const std::vector<CMatrix>& generators,
                           const CloseOptions& opts = {});

  // The abstract direct product G1 x G2. Elements are pairs (a, b) indexed as
  // a * |G2| + b and carry the Kronecker product matrix(a) (x) matrix(b).
  // When the factors share scalar elements, distinct pairs can carry equal
  // matrices; the group structure (and its character theory) is that of the
  // abstract product regardless.
  static FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                    std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const { return elements_.size(); }
  Eigen::Index dim() const { return dim_; }
  const CMatrix& matrix(ElementId a) const { return elements_[a]; }
  bool projective() const { return projective_; }
  const std::vector<CMatrix>& generators() const { return generators_; }

  ElementId identity() const { return 0; }

  ElementId multiply(ElementId a, ElementId b) const {
    return cayley_[static_cast<std::size_t>(a) * order() + b];
  }

  ElementId inverse(ElementId a) const { return inverses_[a]; }

  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<std::vector<ElementId>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(ElementId a) const { return class_of_[a]; }
  const std::vector<ElementId>& conjugacy_class(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  ElementId class_rep(std::size_t c) const { return classes_[c].front(); }

  // |{h : h a h^-1 = a}|. Satisfies centralizer_order(a) * class size = |G|.
  std::size_t centralizer_order(ElementId a) const;

  bool is_abelian() const;

  // Tolerance lookup of a matrix among the elements (fingerprint bucket plus
  // exact Frobenius confirmation). Groups with duplicate matrices (see
  // direct_product) return the smallest matching index.
  std::optional<ElementId> find_element(const CMatrix& m) const;

  // find_element or throw kElementNotFound attributed to `operation`.
  ElementId require_element(const CMatrix& m, const std::string& operation) const;

  // {order, dim, classes, generators_used}; matrices as rows of [re, im]
  // pairs with 17 significant digits.
  void dump_json(std::ostream& out) const;

 private:
  FiniteGroup() = default;

  void build_index();
  void compute_inverses();
  void compute_classes();
  FiniteGroup projective_quotient(std::size_t order_cap) const;

  Eigen::Index dim_ = 0;
  bool projective_ = false;
  std::vector<CMatrix> elements_;
  std::vector<CMatrix> generators_;
  std::vector<ElementId> cayley_;  // order x order, row-major
  std::vector<ElementId> inverses_;
  std::vector<std::vector<ElementId>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::unordered_map<std::uint64_t, std::vector<ElementId>> index_;
};

}  // namespace charcom

#endif  // CHARCOM_GROUP_HPP_
