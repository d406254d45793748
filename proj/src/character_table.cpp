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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "charcom/rng.hpp"

namespace charcom {

namespace {

constexpr std::uint64_t kTableSeed = 0xC0FFEE;
constexpr int kMaxReseeds = 8;
constexpr double kTableTol = 1e-8;

// Class-sum multiplication matrices M_c with M_c[d][e] = #{(x, y) in
// C_c x C_d : x y = rep_e}. Counted as #{x in C_c : x^-1 rep_e in C_d},
// which costs |G| * k instead of |G|^2.
std::vector<Eigen::MatrixXd> class_sum_matrices(const FiniteGroup& g) {
  const std::size_t k = g.num_classes();
  std::vector<Eigen::MatrixXd> mats(k, Eigen::MatrixXd::Zero(k, k));
  for (std::size_t c = 0; c < k; ++c) {
    for (ElementId x : g.conjugacy_class(c)) {
      const ElementId xinv = g.inverse(x);
      for (std::size_t e = 0; e < k; ++e) {
        const std::size_t d = g.class_of(g.multiply(xinv, g.class_rep(e)));
        mats[c](static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(e)) += 1.0;
      }
    }
  }
  return mats;
}

// Characters with entries within 1e-9 of an integer are snapped to it. The
// solver noise is ~1e-14 while genuinely irrational character values (e.g.
// cos(pi/4)) are far from integers, so this only removes noise; it is what
// makes tables of integer-valued groups exact.
void snap_near_integers(CMatrix& chars) {
  for (Eigen::Index i = 0; i < chars.rows(); ++i) {
    for (Eigen::Index j = 0; j < chars.cols(); ++j) {
      double re = chars(i, j).real();
      double im = chars(i, j).imag();
      if (std::fabs(re - std::round(re)) < 1e-9) re = std::round(re);
      if (std::fabs(im - std::round(im)) < 1e-9) im = std::round(im);
      chars(i, j) = Complex(re, im);
    }
  }
}

struct RowKey {
  int dim;
  std::vector<std::pair<long long, long long>> values;  // rounded (re, im)

  bool operator<(const RowKey& other) const {
    if (dim != other.dim) return dim < other.dim;
    // Larger values first within a dimension block, which puts the trivial
    // character (all ones) ahead of the other degree-1 rows.
    return values > other.values;
  }
};

}  // namespace

CharacterTable CharacterTable::compute(const FiniteGroup& g) {
  const std::size_t k = g.num_classes();
  const auto order = static_cast<double>(g.order());
  const auto mats = class_sum_matrices(g);

  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < kMaxReseeds; ++attempt) {
    SplitMix64 rng(sub_seed(kTableSeed, static_cast<std::uint64_t>(attempt)));
    CMatrix combo = CMatrix::Zero(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      combo += Complex(rng.next_double(), rng.next_double()) * mats[c];
    }

    Eigen::ComplexEigenSolver<CMatrix> solver(combo);
    if (solver.info() != Eigen::Success) {
      last_failure = "eigensolver did not converge";
      continue;
    }

    // The k central characters are simple eigenvalues of a generic
    // combination; reject the draw if any two eigenvalues nearly coincide.
    const CVector& eigenvalues = solver.eigenvalues();
    double scale = 1.0;
    for (std::size_t i = 0; i < k; ++i) scale = std::max(scale, std::abs(eigenvalues(i)));
    bool separated = true;
    for (std::size_t i = 0; i < k && separated; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (std::abs(eigenvalues(i) - eigenvalues(j)) < 1e-7 * scale) {
          separated = false;
          break;
        }
    if (!separated) {
      last_failure = "eigenvalues not separated";
      continue;
    }

    // Eigenvector -> character. Component e of an eigenvector is
    // proportional to |C_e| chi(e') / d; the identity class (always class 0)
    // fixes the scale and Sum_e |C_e| |chi(e')|^2 = |G| fixes d.
    CMatrix chars(k, k);
    std::vector<int> dims(k);
    bool extracted = true;
    for (std::size_t i = 0; i < k; ++i) {
      CVector v = solver.eigenvectors().col(static_cast<Eigen::Index>(i));
      if (std::abs(v(0)) < 1e-10 * v.norm()) {
        extracted = false;
        last_failure = "eigenvector vanishes on the identity class";
        break;
      }
      v /= v(0);
      double norm_sq = 0.0;
      for (std::size_t e = 0; e < k; ++e) {
        const double size = static_cast<double>(g.class_size(e));
        norm_sq += std::norm(v(static_cast<Eigen::Index>(e))) / size;
      }
      const double d = std::sqrt(order / norm_sq);
      const double d_rounded = std::round(d);
      if (std::fabs(d - d_rounded) > 1e-6 || d_rounded < 1.0) {
        extracted = false;
        last_failure = "irrep dimension " + format_double(d, 17) + " is not a positive integer";
        break;
      }
      dims[i] = static_cast<int>(d_rounded);
      for (std::size_t e = 0; e < k; ++e) {
        chars(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e)) =
            d * v(static_cast<Eigen::Index>(e)) / static_cast<double>(g.class_size(e));
      }
    }
    if (!extracted) continue;

    if (std::accumulate(dims.begin(), dims.end(), 0LL,
                        [](long long acc, int d) { return acc + static_cast<long long>(d) * d; }) !=
        static_cast<long long>(g.order())) {
      last_failure = "sum of squared dimensions differs from |G|";
      continue;
    }

    snap_near_integers(chars);

    // Deterministic row order.
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<RowKey> keys(k);
    for (std::size_t i = 0; i < k; ++i) {
      keys[i].dim = dims[i];
      keys[i].values.reserve(k);
      for (std::size_t e = 0; e < k; ++e) {
        const Complex z = chars(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e));
        keys[i].values.emplace_back(std::llround(z.real() * 1e6), std::llround(z.imag() * 1e6));
      }
    }
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    CharacterTable table;
    table.group_ = &g;
    table.group_order_ = g.order();
    table.chars_.resize(k, k);
    table.dims_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      table.dims_[i] = dims[perm[i]];
      table.chars_.row(static_cast<Eigen::Index>(i)) =
          chars.row(static_cast<Eigen::Index>(perm[i]));
    }
    table.class_sizes_.resize(k);
    table.class_reps_.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
      table.class_sizes_[c] = g.class_size(c);
      table.class_reps_[c] = g.class_rep(c);
    }

    const OrthogonalityReport report = table.verify_orthogonality();
    if (!report.pass) {
      last_failure = "orthogonality residuals " + format_double(report.max_row_residual, 6) +
                     "/" + format_double(report.max_col_residual, 6) + " exceed 1e-8";
      continue;
    }
    return table;
  }

  throw Error(ErrorKind::kDegenerateEigenproblem, "character_table",
              "failed after " + std::to_string(kMaxReseeds) + " reseeds: " + last_failure);
}

std::vector<Complex> CharacterTable::character_of(ElementId u) const {
  const auto cls = static_cast<Eigen::Index>(group_->class_of(u));
  std::vector<Complex> column(num_irreps());
  for (std::size_t i = 0; i < column.size(); ++i) {
    column[i] = chars_(static_cast<Eigen::Index>(i), cls);
  }
  return column;
}

OrthogonalityReport CharacterTable::verify_orthogonality() const {
  const std::size_t k = num_irreps();
  const auto order = static_cast<double>(group_order_);
  OrthogonalityReport report;

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex sum = 0.0;
      for (std::size_t c = 0; c < k; ++c) {
        sum += static_cast<double>(class_sizes_[c]) * chi(i, c) * std::conj(chi(j, c));
      }
      const double expected = (i == j) ? order : 0.0;
      report.max_row_residual = std::max(report.max_row_residual, std::abs(sum - expected));
    }
  }

  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t cp = 0; cp < k; ++cp) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) sum += chi(i, c) * std::conj(chi(i, cp));
      const double expected = (c == cp) ? order / static_cast<double>(class_sizes_[c]) : 0.0;
      report.max_col_residual = std::max(report.max_col_residual, std::abs(sum - expected));
    }
  }

  report.pass = report.max_row_residual < report.tolerance &&
                report.max_col_residual < report.tolerance;
  return report;
}

void CharacterTable::write_csv(std::ostream& out) const {
  const std::size_t k = num_irreps();
  out << "class_rep,class_size";
  for (std::size_t i = 1; i <= k; ++i) out << ",chi_" << i;
  out << "\n";
  for (std::size_t c = 0; c < k; ++c) {
    out << class_reps_[c] << "," << class_sizes_[c];
    for (std::size_t i = 0; i < k; ++i) out << "," << format_complex(chi(i, c), 12);
    out << "\n";
  }
}

}  // namespace charcom
