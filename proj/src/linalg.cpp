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

#include "charcom/linalg.hpp"

#include <cmath>
#include <cstdio>

#include "charcom/rng.hpp"

namespace charcom {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::uint64_t matrix_fingerprint(const CMatrix& m) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      // llround(-0.0 * 1e6) == 0, so signed zeros hash alike.
      auto re = static_cast<std::uint64_t>(std::llround(m(i, j).real() * 1e6));
      auto im = static_cast<std::uint64_t>(std::llround(m(i, j).imag() * 1e6));
      h = mix64(h ^ (re + kGolden));
      h = mix64(h ^ (im + kGolden));
    }
  }
  return h;
}

std::string format_double(double x, int sig_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig_digits, x);
  return buf;
}

std::string format_complex(Complex z, int sig_digits) {
  char buf[160];
  double re = z.real() + 0.0;  // drop negative zero
  double im = z.imag() + 0.0;
  // Embed the sign so the imaginary part always carries one: "1+0j", "1-1j".
  std::snprintf(buf, sizeof buf, "%.*g%s%.*gj", sig_digits, re,
                std::signbit(im) ? "-" : "+", sig_digits, std::fabs(im));
  return buf;
}

}  // namespace charcom
