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

#ifndef CHARCOM_CHARACTER_TABLE_HPP_
#define CHARCOM_CHARACTER_TABLE_HPP_

#include <cstddef>
#include <ostream>
#include <vector>

#include "charcom/group.hpp"
#include "charcom/linalg.hpp"

namespace charcom {

struct OrthogonalityReport {
  double max_row_residual = 0.0;
  double max_col_residual = 0.0;
  double tolerance = 1e-8;
  bool pass = false;
};

// Character table of a FiniteGroup, computed with the Burnside class-sum
// method: the class-sum multiplication matrices commute, and a random linear
// combination of them (fixed seed, deterministic reseeding) generically has
// simple spectrum whose eigenvectors are the central characters. Rows are
// sorted by (dimension ascending, then rounded values, trivial row first)
// so repeated runs produce bit-identical tables.
class CharacterTable {
 public:
  // Throws kDegenerateEigenproblem if 8 reseeds fail to separate the
  // eigenvectors or to produce a table passing the orthogonality checks.
  static CharacterTable compute(const FiniteGroup& g);

  std::size_t num_irreps() const { return dims_.size(); }
  std::size_t num_classes() const { return dims_.size(); }
  std::size_t group_order() const { return group_order_; }
  const FiniteGroup* group() const { return group_; }

  // chi_i evaluated on the representative of class c.
  Complex chi(std::size_t irrep, std::size_t cls) const { return chars_(irrep, cls); }
  int dim(std::size_t irrep) const { return dims_[irrep]; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t class_size(std::size_t cls) const { return class_sizes_[cls]; }
  ElementId class_rep(std::size_t cls) const { return class_reps_[cls]; }

  // Column (chi_1(u), ..., chi_k(u)) via class lookup.
  std::vector<Complex> character_of(ElementId u) const;

  // Row and column orthogonality residuals, pass/fail at 1e-8.
  OrthogonalityReport verify_orthogonality() const;

  // CSV: "class_rep,class_size,chi_1,...,chi_k", complex as "re+imj" with
  // 12 significant digits; one row per class.
  void write_csv(std::ostream& out) const;

 private:
  const FiniteGroup* group_ = nullptr;
  std::size_t group_order_ = 0;
  CMatrix chars_;  // k x k, row = irrep, column = class
  std::vector<int> dims_;
  std::vector<std::size_t> class_sizes_;
  std::vector<ElementId> class_reps_;
};

}  // namespace charcom

#endif  // CHARCOM_CHARACTER_TABLE_HPP_
