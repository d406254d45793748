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

#include "charcom/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "charcom/rng.hpp"

namespace charcom {

namespace {

constexpr std::uint64_t kIrrepSeed = 0xC0FFEE;
constexpr int kMaxReseeds = 8;
constexpr double kIrrepTol = 1e-7;
// Regular-representation working set, with headroom for solver scratch.
constexpr std::size_t kMemoryBudgetBytes = 1ULL << 30;

// Verifies homomorphism, trace match against the table, and the
// irreducibility criterion (1/|G|) sum |tr|^2 = 1.
bool irrep_checks_pass(const FiniteGroup& g, const CharacterTable& t,
                       std::size_t irrep_index, const std::vector<CMatrix>& images,
                       std::string* failure) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId ab = g.multiply(static_cast<ElementId>(a), static_cast<ElementId>(b));
      if (frobenius_distance(images[ab], images[a] * images[b]) > kIrrepTol) {
        *failure = "homomorphism residual exceeds 1e-7";
        return false;
      }
    }
  }
  double norm_sq = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const Complex tr = images[a].trace();
    if (std::abs(tr - t.chi(irrep_index, g.class_of(static_cast<ElementId>(a)))) > kIrrepTol) {
      *failure = "trace differs from the character table";
      return false;
    }
    norm_sq += std::norm(tr);
  }
  if (std::fabs(norm_sq / static_cast<double>(n) - 1.0) > kIrrepTol) {
    *failure = "character norm differs from 1 (reducible block)";
    return false;
  }
  return true;
}

}  // namespace

Irrep explicit_irrep(const FiniteGroup& g, const CharacterTable& t, std::size_t irrep_index) {
  const std::size_t n = g.order();
  const int d = t.dim(irrep_index);
  if (n * n * sizeof(Complex) * 4 > kMemoryBudgetBytes) {
    throw Error(ErrorKind::kMemoryBudgetExceeded, "explicit_irrep",
                "regular representation of order " + std::to_string(n) +
                    " exceeds the memory budget");
  }

  // Central idempotent in the regular representation:
  // E[a][b] = (d/|G|) conj(chi(a b^-1)).
  CMatrix idempotent(n, n);
  const double scale = static_cast<double>(d) / static_cast<double>(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId ab_inv =
          g.multiply(static_cast<ElementId>(a), g.inverse(static_cast<ElementId>(b)));
      idempotent(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          scale * std::conj(t.chi(irrep_index, g.class_of(ab_inv)));
    }
  }

  Eigen::SelfAdjointEigenSolver<CMatrix> block_solver(idempotent);
  if (block_solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kBlockSplitFailed, "explicit_irrep", "idempotent eigensolver failed");
  }
  const std::size_t block_dim = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < block_solver.eigenvalues().size(); ++i) {
    if (block_solver.eigenvalues()(i) > 0.5) ++rank;
  }
  if (rank != block_dim) {
    throw Error(ErrorKind::kBlockSplitFailed, "explicit_irrep",
                "isotypic block rank " + std::to_string(rank) + ", expected " +
                    std::to_string(block_dim));
  }
  // Orthonormal basis of the isotypic block (eigenvalues ~1 sort last).
  const CMatrix basis = block_solver.eigenvectors().rightCols(static_cast<Eigen::Index>(block_dim));

  // Restriction of the regular representation to the block. R(g) permutes
  // basis rows: (R(g) B)[a] = B[g^-1 a].
  std::vector<CMatrix> block_images(n);
  for (std::size_t a = 0; a < n; ++a) {
    const ElementId ginv = g.inverse(static_cast<ElementId>(a));
    CMatrix permuted(n, block_dim);
    for (std::size_t row = 0; row < n; ++row) {
      permuted.row(static_cast<Eigen::Index>(row)) =
          basis.row(static_cast<Eigen::Index>(g.multiply(ginv, static_cast<ElementId>(row))));
    }
    block_images[a] = basis.adjoint() * permuted;
  }

  std::string failure = "no attempt made";
  for (int attempt = 0; attempt < kMaxReseeds; ++attempt) {
    // Random self-adjoint commutant element: averaging A over the block
    // representation lands in the commutant, whose generic element has d
    // eigenvalues of multiplicity d. Each eigenspace carries one copy of
    // the irrep.
    SplitMix64 rng(sub_seed(kIrrepSeed, irrep_index, static_cast<std::uint64_t>(attempt)));
    CMatrix random(block_dim, block_dim);
    for (std::size_t i = 0; i < block_dim; ++i)
      for (std::size_t j = 0; j < block_dim; ++j)
        random(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            Complex(rng.next_gaussian(), rng.next_gaussian());
    CMatrix commutant = CMatrix::Zero(block_dim, block_dim);
    const CMatrix seed_matrix = 0.5 * (random + random.adjoint());
    for (std::size_t a = 0; a < n; ++a) {
      commutant += block_images[a] * seed_matrix * block_images[a].adjoint();
    }
    commutant /= static_cast<double>(n);
    commutant = 0.5 * (commutant + commutant.adjoint());

    Eigen::SelfAdjointEigenSolver<CMatrix> split_solver(commutant);
    if (split_solver.info() != Eigen::Success) {
      failure = "commutant eigensolver failed";
      continue;
    }

    // Cluster the (ascending) eigenvalues; need d clusters of size d.
    const Eigen::VectorXd evals = split_solver.eigenvalues();
    const double spread = evals(evals.size() - 1) - evals(0);
    const double gap_tol = 1e-6 * std::max(1.0, spread);
    std::vector<std::size_t> cluster_sizes{1};
    for (Eigen::Index i = 1; i < evals.size(); ++i) {
      if (evals(i) - evals(i - 1) > gap_tol) {
        cluster_sizes.push_back(1);
      } else {
        ++cluster_sizes.back();
      }
    }
    const bool clean_split =
        cluster_sizes.size() == static_cast<std::size_t>(d) &&
        std::all_of(cluster_sizes.begin(), cluster_sizes.end(),
                    [&](std::size_t s) { return s == static_cast<std::size_t>(d); });
    if (!clean_split) {
      failure = "commutant spectrum did not split into d clusters of size d";
      continue;
    }

    const CMatrix copy_basis = split_solver.eigenvectors().leftCols(d);
    Irrep irrep;
    irrep.index = irrep_index;
    irrep.dim = d;
    irrep.images.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      irrep.images[a] = copy_basis.adjoint() * block_images[a] * copy_basis;
    }
    if (irrep_checks_pass(g, t, irrep_index, irrep.images, &failure)) return irrep;
  }

  throw Error(ErrorKind::kBlockSplitFailed, "explicit_irrep",
              "failed after " + std::to_string(kMaxReseeds) + " reseeds: " + failure);
}

std::vector<int> natural_multiplicities(const FiniteGroup& g, const CharacterTable& t) {
  const std::size_t k = t.num_irreps();
  const auto order = static_cast<double>(g.order());
  std::vector<int> multiplicities(k);
  long long dim_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // Traces are class functions, so the sum collapses onto classes.
    Complex sum = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      sum += static_cast<double>(t.class_size(c)) * g.matrix(t.class_rep(c)).trace() *
             std::conj(t.chi(i, c));
    }
    const Complex m = sum / order;
    const double rounded = std::round(m.real());
    if (std::abs(m - Complex(rounded, 0.0)) > 1e-6 || rounded < 0.0) {
      throw Error(ErrorKind::kNonIntegralMultiplicity, "natural_multiplicities",
                  "multiplicity of irrep " + std::to_string(i) + " is " +
                      format_complex(m, 12));
    }
    multiplicities[i] = static_cast<int>(rounded);
    dim_sum += multiplicities[i] * static_cast<long long>(t.dim(i));
  }
  if (dim_sum != static_cast<long long>(g.dim())) {
    throw Error(ErrorKind::kNonIntegralMultiplicity, "natural_multiplicities",
                "multiplicities sum to dimension " + std::to_string(dim_sum) + ", expected " +
                    std::to_string(g.dim()));
  }
  return multiplicities;
}

}  // namespace charcom
