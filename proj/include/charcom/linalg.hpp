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

#ifndef CHARCOM_LINALG_HPP_
#define CHARCOM_LINALG_HPP_

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace charcom {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Frobenius distance, the element-equality metric used throughout.
inline double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm();
}

inline bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm() < tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Hash of the matrix with every entry rounded to 6 decimal places. Matrices
// within the element-equality tolerance of each other land in the same bucket
// as long as no rounded entry straddles a 0.5e-6 boundary; lookups confirm
// with an exact Frobenius-distance test.
std::uint64_t matrix_fingerprint(const CMatrix& m);

// "re+imj" rendering used by the CSV exports, e.g. "1+0j", "0.5-0.866j".
std::string format_complex(Complex z, int sig_digits);

// printf %g with the given number of significant digits.
std::string format_double(double x, int sig_digits);

}  // namespace charcom

#endif  // CHARCOM_LINALG_HPP_
