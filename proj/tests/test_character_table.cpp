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

#include "charcom/character_table.hpp"

#include <cmath>
#include <sstream>

#include <doctest.h>

#include "charcom/builtin_groups.hpp"
#include "charcom/circuits.hpp"
#include "charcom/irrep.hpp"
#include "test_support.hpp"

using namespace charcom;

namespace {

FiniteGroup builtin(const std::string& name) {
  return FiniteGroup::close(builtin_group_generators(name));
}

long long dim_square_sum(const CharacterTable& t) {
  long long sum = 0;
  for (std::size_t i = 0; i < t.num_irreps(); ++i) {
    sum += static_cast<long long>(t.dim(i)) * t.dim(i);
  }
  return sum;
}

}  // namespace

TEST_CASE("character table: Z2 is exact") {
  const FiniteGroup g = builtin("z2");
  const CharacterTable t = CharacterTable::compute(g);
  REQUIRE(t.num_irreps() == 2);
  CHECK(t.dims() == std::vector<int>{1, 1});
  // Trivial row first, then the sign row.
  CHECK(t.chi(0, 0) == Complex(1.0, 0.0));
  CHECK(t.chi(0, 1) == Complex(1.0, 0.0));
  CHECK(t.chi(1, 0) == Complex(1.0, 0.0));
  CHECK(t.chi(1, 1) == Complex(-1.0, 0.0));

  const OrthogonalityReport report = t.verify_orthogonality();
  CHECK(report.max_row_residual == 0.0);
  CHECK(report.max_col_residual == 0.0);
  CHECK(report.pass);
}

TEST_CASE("character table: S3 matches the textbook table") {
  const FiniteGroup g = builtin("s3");
  const CharacterTable t = CharacterTable::compute(g);
  REQUIRE(t.num_irreps() == 3);
  CHECK(t.dims() == std::vector<int>{1, 1, 2});
  // Classes in order (e, transpositions, 3-cycles).
  const Complex expected[3][3] = {
      {{1, 0}, {1, 0}, {1, 0}},    // trivial
      {{1, 0}, {-1, 0}, {1, 0}},   // sign
      {{2, 0}, {0, 0}, {-1, 0}},   // standard
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(std::abs(t.chi(i, c) - expected[i][c]) < 1e-10);
    }
  }
  CHECK(t.verify_orthogonality().max_row_residual < 1e-10);
  CHECK(t.verify_orthogonality().max_col_residual < 1e-10);
}

TEST_CASE("character table: pauli1 has eight degree-1 and two degree-2 irreps") {
  const FiniteGroup g = builtin("pauli1");
  const CharacterTable t = CharacterTable::compute(g);
  REQUIRE(t.num_irreps() == 10);
  int ones = 0, twos = 0;
  for (std::size_t i = 0; i < t.num_irreps(); ++i) {
    if (t.dim(i) == 1) ++ones;
    if (t.dim(i) == 2) ++twos;
  }
  CHECK(ones == 8);
  CHECK(twos == 2);
  CHECK(dim_square_sum(t) == 16);
  CHECK(t.verify_orthogonality().max_row_residual < 1e-10);
}

TEST_CASE("character table: suite-wide invariants") {
  for (const std::string& name : {"z2", "z8", "s3", "pauli1", "pauli2", "clifford1",
                                  "cnot_phase2"}) {
    CAPTURE(name);
    const FiniteGroup g = builtin(name);
    const CharacterTable t = CharacterTable::compute(g);
    CHECK(t.num_irreps() == g.num_classes());
    CHECK(dim_square_sum(t) == static_cast<long long>(g.order()));
    CHECK(t.verify_orthogonality().pass);

    // chi_i(e) = d_i, a positive integer within 1e-6.
    for (std::size_t i = 0; i < t.num_irreps(); ++i) {
      CHECK(std::abs(t.chi(i, 0) - Complex(t.dim(i), 0.0)) < 1e-6);
    }

    // Second orthogonality: sum_i |chi_i(u)|^2 = |C_G(u)|.
    for (ElementId u = 0; u < g.order(); ++u) {
      double sum = 0.0;
      for (const Complex& chi : t.character_of(u)) sum += std::norm(chi);
      CHECK(std::fabs(sum - static_cast<double>(g.centralizer_order(u))) < 1e-7);
    }
  }
}

TEST_CASE("character table: abelian groups have all-1 dimensions") {
  const FiniteGroup g = builtin("z8");
  const CharacterTable t = CharacterTable::compute(g);
  REQUIRE(t.num_irreps() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(t.dim(i) == 1);
}

TEST_CASE("character_of") {
  const FiniteGroup s3 = builtin("s3");
  const CharacterTable t = CharacterTable::compute(s3);
  const auto at_identity = t.character_of(s3.identity());
  for (std::size_t i = 0; i < t.num_irreps(); ++i) {
    CHECK(std::abs(at_identity[i] - Complex(t.dim(i), 0.0)) < 1e-10);
  }
  const auto at_transposition = t.character_of(1);
  CHECK(std::abs(at_transposition[0] - Complex(1, 0)) < 1e-10);
  CHECK(std::abs(at_transposition[1] - Complex(-1, 0)) < 1e-10);
  CHECK(std::abs(at_transposition[2]) < 1e-10);

  const FiniteGroup pauli = builtin("pauli1");
  const CharacterTable tp = CharacterTable::compute(pauli);
  const ElementId x = pauli.require_element(gate_matrix(GateKind::kX), "test");
  const auto at_x = tp.character_of(x);
  int plus_ones = 0, minus_ones = 0;
  for (std::size_t i = 0; i < tp.num_irreps(); ++i) {
    if (tp.dim(i) == 2) {
      CHECK(std::abs(at_x[i]) < 1e-10);  // zero in both 2-dim irreps
    } else if (std::abs(at_x[i] - Complex(1, 0)) < 1e-10) {
      ++plus_ones;
    } else if (std::abs(at_x[i] - Complex(-1, 0)) < 1e-10) {
      ++minus_ones;
    }
  }
  CHECK(plus_ones == 4);
  CHECK(minus_ones == 4);
}

TEST_CASE("character table: bit-identical across runs") {
  const FiniteGroup g = builtin("clifford1");
  const CharacterTable a = CharacterTable::compute(g);
  const CharacterTable b = CharacterTable::compute(g);
  REQUIRE(a.num_irreps() == b.num_irreps());
  CHECK(a.dims() == b.dims());
  for (std::size_t i = 0; i < a.num_irreps(); ++i) {
    for (std::size_t c = 0; c < a.num_classes(); ++c) {
      CHECK(a.chi(i, c).real() == b.chi(i, c).real());
      CHECK(a.chi(i, c).imag() == b.chi(i, c).imag());
    }
  }
}

TEST_CASE("character table CSV export") {
  const FiniteGroup g = builtin("z2");
  const CharacterTable t = CharacterTable::compute(g);
  std::ostringstream out;
  t.write_csv(out);
  CHECK(out.str() ==
        "class_rep,class_size,chi_1,chi_2\n"
        "0,1,1+0j,1+0j\n"
        "1,1,1+0j,-1+0j\n");
}

TEST_CASE("explicit irreps: trivial representation") {
  const FiniteGroup g = builtin("s3");
  const CharacterTable t = CharacterTable::compute(g);
  const Irrep trivial = explicit_irrep(g, t, 0);
  REQUIRE(trivial.dim == 1);
  for (const CMatrix& image : trivial.images) {
    CHECK(std::abs(image(0, 0) - Complex(1, 0)) < 1e-7);
  }
}

TEST_CASE("explicit irreps: s3 standard representation traces") {
  const FiniteGroup g = builtin("s3");
  const CharacterTable t = CharacterTable::compute(g);
  const Irrep standard = explicit_irrep(g, t, 2);
  REQUIRE(standard.dim == 2);
  for (ElementId a = 0; a < g.order(); ++a) {
    CHECK(std::abs(standard.images[a].trace() - t.chi(2, g.class_of(a))) < 1e-7);
  }
}

TEST_CASE("explicit irreps: full checks on every irrep of s3, z8, pauli1") {
  for (const std::string& name : {"s3", "z8", "pauli1"}) {
    CAPTURE(name);
    const FiniteGroup g = builtin(name);
    const CharacterTable t = CharacterTable::compute(g);
    for (std::size_t i = 0; i < t.num_irreps(); ++i) {
      const Irrep irrep = explicit_irrep(g, t, i);
      REQUIRE(irrep.images.size() == g.order());
      double norm_sq = 0.0;
      for (ElementId a = 0; a < g.order(); ++a) {
        CHECK(is_unitary(irrep.images[a], 1e-7));
        CHECK(std::abs(irrep.images[a].trace() - t.chi(i, g.class_of(a))) < 1e-7);
        norm_sq += std::norm(irrep.images[a].trace());
        for (ElementId b = 0; b < g.order(); ++b) {
          CHECK((irrep.images[g.multiply(a, b)] - irrep.images[a] * irrep.images[b]).norm() <
                1e-7);
        }
      }
      CHECK(std::fabs(norm_sq / static_cast<double>(g.order()) - 1.0) < 1e-7);
    }
  }
}

TEST_CASE("explicit irreps: pauli1 degree-2 irrep matches the defining matrices up to basis") {
  const FiniteGroup g = builtin("pauli1");
  const CharacterTable t = CharacterTable::compute(g);
  // One of the two degree-2 irreps is the defining representation; identify
  // it by trace match on all 16 elements.
  bool found = false;
  for (std::size_t i = 0; i < t.num_irreps(); ++i) {
    if (t.dim(i) != 2) continue;
    bool matches = true;
    for (ElementId a = 0; a < g.order(); ++a) {
      if (std::abs(g.matrix(a).trace() - t.chi(i, g.class_of(a))) > 1e-7) {
        matches = false;
        break;
      }
    }
    if (!matches) continue;
    found = true;
    const Irrep irrep = explicit_irrep(g, t, i);
    for (ElementId a = 0; a < g.order(); ++a) {
      CHECK(std::abs(irrep.images[a].trace() - g.matrix(a).trace()) < 1e-7);
    }
  }
  CHECK(found);
}

TEST_CASE("natural multiplicities") {
  const FiniteGroup trivial = FiniteGroup::close({CMatrix::Identity(2, 2)});
  const CharacterTable t_trivial = CharacterTable::compute(trivial);
  CHECK(natural_multiplicities(trivial, t_trivial) == std::vector<int>{2});

  const FiniteGroup pauli = builtin("pauli1");
  const CharacterTable tp = CharacterTable::compute(pauli);
  const auto mp = natural_multiplicities(pauli, tp);
  int nonzero = 0;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (mp[i] != 0) {
      ++nonzero;
      CHECK(tp.dim(i) == 2);
      CHECK(mp[i] == 1);
    }
  }
  CHECK(nonzero == 1);

  const FiniteGroup s3 = builtin("s3");
  const CharacterTable ts = CharacterTable::compute(s3);
  // Permutation action = trivial + standard; the sign does not appear.
  CHECK(natural_multiplicities(s3, ts) == std::vector<int>{1, 0, 1});
}
