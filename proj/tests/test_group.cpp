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
#include <set>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "charcom/builtin_groups.hpp"
#include "charcom/circuits.hpp"
#include "test_support.hpp"

using namespace charcom;
using charcom::testing::naive_class_count;
using charcom::testing::naive_closure;

namespace {

FiniteGroup builtin(const std::string& name) {
  return FiniteGroup::close(builtin_group_generators(name));
}

void check_structure(const FiniteGroup& g) {
  const std::size_t n = g.order();

  // Latin square: every row and column is a permutation.
  for (std::size_t a = 0; a < n; ++a) {
    std::set<ElementId> row, col;
    for (std::size_t b = 0; b < n; ++b) {
      row.insert(g.multiply(static_cast<ElementId>(a), static_cast<ElementId>(b)));
      col.insert(g.multiply(static_cast<ElementId>(b), static_cast<ElementId>(a)));
    }
    REQUIRE(row.size() == n);
    REQUIRE(col.size() == n);
  }

  // Associativity on 1000 random triples.
  SplitMix64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = static_cast<ElementId>(rng.next_below(n));
    const auto b = static_cast<ElementId>(rng.next_below(n));
    const auto c = static_cast<ElementId>(rng.next_below(n));
    REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }

  // Inverses against the matrices.
  for (ElementId a = 0; a < n; ++a) {
    REQUIRE(g.multiply(a, g.inverse(a)) == g.identity());
    REQUIRE((g.matrix(g.inverse(a)) * g.matrix(a) - CMatrix::Identity(g.dim(), g.dim())).norm() <
            1e-9);
  }

  // Classes partition the elements; identity is alone; sizes divide |G|;
  // centralizer times class size is |G|.
  std::size_t total = 0;
  for (const auto& cls : g.conjugacy_classes()) total += cls.size();
  REQUIRE(total == n);
  REQUIRE(g.conjugacy_class(g.class_of(g.identity())).size() == 1);
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    REQUIRE(n % g.class_size(c) == 0);
  }
  for (ElementId a = 0; a < n; ++a) {
    REQUIRE(g.centralizer_order(a) * g.class_size(g.class_of(a)) == n);
  }
}

}  // namespace

TEST_CASE("close_group: trivial group") {
  const FiniteGroup g = FiniteGroup::close({CMatrix::Identity(2, 2)});
  CHECK(g.order() == 1);
  CHECK(g.num_classes() == 1);
  CHECK(g.is_abelian());
}

TEST_CASE("close_group: pauli1 is the 16-element Pauli group, oracle-confirmed") {
  const auto generators = builtin_group_generators("pauli1");
  const auto oracle = naive_closure(generators);
  REQUIRE(oracle.size() == 16);
  REQUIRE(naive_class_count(oracle) == 10);

  const FiniteGroup g = FiniteGroup::close(generators);
  CHECK(g.order() == 16);
  CHECK(g.num_classes() == 10);
  CHECK(g.matrix(0) == CMatrix::Identity(2, 2));
  // Center {I, iI, -I, -iI}: four singleton classes; six classes of size 2.
  std::size_t singletons = 0;
  for (const auto& cls : g.conjugacy_classes()) {
    if (cls.size() == 1) ++singletons;
  }
  CHECK(singletons == 4);
  CHECK(g.num_classes() - singletons == 6);
}

TEST_CASE("close_group: the literal closure of {X, Z} is the 8-element dihedral group") {
  // All products of the real matrices X and Z stay real, so the scalar i
  // never appears and the closure is D4, not the full Pauli group.
  const std::vector<CMatrix> generators = {gate_matrix(GateKind::kX), gate_matrix(GateKind::kZ)};
  const auto oracle = naive_closure(generators);
  CHECK(oracle.size() == 8);
  const FiniteGroup g = FiniteGroup::close(generators);
  CHECK(g.order() == 8);
  CHECK(g.num_classes() == 5);
  CHECK(g.num_classes() == naive_class_count(oracle));
}

TEST_CASE("close_group: clifford1 has order 192, oracle-confirmed") {
  const auto generators = builtin_group_generators("clifford1");
  REQUIRE(naive_closure(generators).size() == 192);
  CHECK(FiniteGroup::close(generators).order() == 192);
}

TEST_CASE("close_group: generator validation") {
  CMatrix bad(2, 2);
  bad << 1.0, 1.0, 0.0, 1.0;
  try {
    FiniteGroup::close({bad});
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotUnitary);
  }

  try {
    FiniteGroup::close({CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDimensionMismatch);
  }

  try {
    FiniteGroup::close({gate_matrix(GateKind::kX)}, CloseOptions{1, false});
    FAIL("expected GroupNotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGroupNotClosed);
    CHECK(e.operation() == "close_group");
  }
}

TEST_CASE("close_group: H plus T_3 blows past the default cap") {
  const std::vector<CMatrix> generators = {gate_matrix(GateKind::kH),
                                           gate_matrix(GateKind::kT, 3)};
  try {
    FiniteGroup::close(generators);
    FAIL("expected GroupNotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGroupNotClosed);
  }
}

TEST_CASE("multiply: identity and inverse laws, matrix consistency") {
  const FiniteGroup g = builtin("pauli1");
  SplitMix64 rng(7);
  for (ElementId a = 0; a < g.order(); ++a) {
    CHECK(g.multiply(g.identity(), a) == a);
    CHECK(g.multiply(a, g.identity()) == a);
    CHECK(g.multiply(a, g.inverse(a)) == g.identity());
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = static_cast<ElementId>(rng.next_below(g.order()));
    const auto b = static_cast<ElementId>(rng.next_below(g.order()));
    CHECK((g.matrix(g.multiply(a, b)) - g.matrix(a) * g.matrix(b)).norm() < 1e-9);
  }
}

TEST_CASE("multiply: X times Z is -iY in pauli1") {
  const FiniteGroup g = builtin("pauli1");
  const ElementId x = g.require_element(gate_matrix(GateKind::kX), "test");
  const ElementId z = g.require_element(gate_matrix(GateKind::kZ), "test");
  const CMatrix expected = Complex(0.0, -1.0) * gate_matrix(GateKind::kY);
  CHECK((g.matrix(g.multiply(x, z)) - expected).norm() < 1e-12);
}

TEST_CASE("conjugacy classes: abelian groups split into singletons") {
  const FiniteGroup g = builtin("z8");
  CHECK(g.order() == 8);
  CHECK(g.num_classes() == 8);
  for (const auto& cls : g.conjugacy_classes()) CHECK(cls.size() == 1);
}

TEST_CASE("conjugacy classes: s3 sizes are {1, 3, 2}") {
  const FiniteGroup g = builtin("s3");
  REQUIRE(g.order() == 6);
  REQUIRE(g.num_classes() == 3);
  CHECK(g.class_size(0) == 1);
  CHECK(g.class_size(1) == 3);
  CHECK(g.class_size(2) == 2);
}

TEST_CASE("centralizer orders") {
  const FiniteGroup s3 = builtin("s3");
  CHECK(s3.centralizer_order(s3.identity()) == 6);
  // Element 1 is the generating transposition.
  CHECK(s3.class_size(s3.class_of(1)) == 3);
  CHECK(s3.centralizer_order(1) == 2);

  const FiniteGroup pauli = builtin("pauli1");
  const ElementId x = pauli.require_element(gate_matrix(GateKind::kX), "test");
  CHECK(pauli.centralizer_order(x) == 8);
  CHECK(pauli.centralizer_order(pauli.identity()) == 16);
}

TEST_CASE("direct products") {
  const FiniteGroup z2 = builtin("z2");
  const FiniteGroup z2xz2 = FiniteGroup::direct_product(z2, z2);
  CHECK(z2xz2.order() == 4);
  CHECK(z2xz2.is_abelian());
  CHECK(z2xz2.matrix(0) == CMatrix::Identity(4, 4));

  const FiniteGroup pauli = builtin("pauli1");
  const FiniteGroup pp = FiniteGroup::direct_product(pauli, pauli);
  CHECK(pp.order() == 256);
  CHECK(pp.num_classes() == 100);  // class pairs

  const FiniteGroup s3xz2 = FiniteGroup::direct_product(builtin("s3"), z2);
  CHECK(s3xz2.order() == 12);
  CHECK(s3xz2.num_classes() == 6);

  try {
    FiniteGroup::direct_product(pauli, pauli, 100);
    FAIL("expected GroupNotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kGroupNotClosed);
  }
}

TEST_CASE("is_abelian") {
  CHECK(builtin("z8").is_abelian());
  CHECK_FALSE(builtin("pauli1").is_abelian());
  CHECK_FALSE(builtin("s3").is_abelian());
}

TEST_CASE("group structure invariants across the suite") {
  for (const std::string& name : {"z2", "z8", "s3", "pauli1", "pauli2", "clifford1"}) {
    CAPTURE(name);
    check_structure(builtin(name));
  }
  check_structure(FiniteGroup::direct_product(builtin("s3"), builtin("z2")));
}

TEST_CASE("element lookup") {
  const FiniteGroup g = builtin("pauli1");
  CHECK(g.find_element(gate_matrix(GateKind::kY)).has_value());
  CHECK_FALSE(g.find_element(gate_matrix(GateKind::kH)).has_value());
  try {
    g.require_element(gate_matrix(GateKind::kH), "expectation_value");
    FAIL("expected ElementNotFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kElementNotFound);
    CHECK(e.operation() == "expectation_value");
  }
}

TEST_CASE("projective quotients") {
  CloseOptions projective;
  projective.projective = true;
  const FiniteGroup p1 = FiniteGroup::close(builtin_group_generators("pauli1"), projective);
  CHECK(p1.order() == 4);  // Pauli mod phases = Z2 x Z2
  CHECK(p1.is_abelian());
  CHECK(p1.projective());

  const FiniteGroup c1 = FiniteGroup::close(builtin_group_generators("clifford1"), projective);
  CHECK(c1.order() == 24);  // single-qubit Clifford mod phases
  check_structure(c1);
}

TEST_CASE("group JSON dump") {
  const FiniteGroup g = builtin("s3");
  std::ostringstream out;
  g.dump_json(out);
  const auto parsed = nlohmann::json::parse(out.str());
  CHECK(parsed.at("order") == 6);
  CHECK(parsed.at("dim") == 3);
  CHECK(parsed.at("classes").size() == 3);
  CHECK(parsed.at("generators_used").size() == 2);
  // matrices as rows of [re, im] pairs
  CHECK(parsed.at("generators_used").at(0).at(0).at(1).at(0).get<double>() == 1.0);
}
