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

#ifndef CHARCOM_TESTS_TEST_SUPPORT_HPP_
#define CHARCOM_TESTS_TEST_SUPPORT_HPP_

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "charcom/linalg.hpp"
#include "charcom/rng.hpp"

namespace charcom::testing {

// Independent closure oracle: repeated multiplication with exhaustive
// pairwise Frobenius comparison, no hashing, no Cayley machinery. Slow and
// dumb on purpose.
inline std::vector<CMatrix> naive_closure(const std::vector<CMatrix>& generators,
                                          std::size_t cap = 100'000) {
  const auto dim = generators.front().rows();
  std::vector<CMatrix> elements = {CMatrix::Identity(dim, dim)};
  auto find = [&](const CMatrix& m) -> bool {
    for (const CMatrix& e : elements) {
      if ((e - m).norm() < 1e-9) return true;
    }
    return false;
  };
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = elements.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (const CMatrix& g : generators) {
        CMatrix p = elements[i] * g;
        if (!find(p)) {
          if (elements.size() >= cap) {
            throw std::runtime_error("naive_closure: cap exceeded");
          }
          elements.push_back(std::move(p));
          grew = true;
        }
      }
    }
  }
  return elements;
}

// Conjugacy classes straight from the matrices; unitary inverses are
// adjoints, so this never touches the group's tables.
inline std::size_t naive_class_count(const std::vector<CMatrix>& elements) {
  std::vector<bool> assigned(elements.size(), false);
  std::size_t classes = 0;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    if (assigned[a]) continue;
    ++classes;
    for (const CMatrix& h : elements) {
      const CMatrix conjugate = h * elements[a] * h.adjoint();
      for (std::size_t b = 0; b < elements.size(); ++b) {
        if (!assigned[b] && (elements[b] - conjugate).norm() < 1e-9) {
          assigned[b] = true;
        }
      }
    }
  }
  return classes;
}

inline CVector random_state(Eigen::Index dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(rng.next_gaussian(), rng.next_gaussian());
  v /= v.norm();
  return v;
}

inline CMatrix random_observable(Eigen::Index dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      m(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
  return 0.5 * (m + m.adjoint());
}

inline std::string env_or_fail(const char* name) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') {
    throw std::runtime_error(std::string("environment variable ") + name + " is not set");
  }
  return value;
}

}  // namespace charcom::testing

#endif  // CHARCOM_TESTS_TEST_SUPPORT_HPP_
