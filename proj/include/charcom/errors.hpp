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

#ifndef CHARCOM_ERRORS_HPP_
#define CHARCOM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace charcom {

enum class ErrorKind {
  kNotUnitary,
  kGroupNotClosed,
  kDimensionMismatch,
  kElementNotFound,
  kDegenerateEigenproblem,
  kBlockSplitFailed,
  kMemoryBudgetExceeded,
  kNonIntegralMultiplicity,
  kNotAbelian,
  kDomainError,
  kWidthExceeded,
  kInvalidEdge,
  kNotSelfAdjoint,
  kInvalidDensityMatrix,
  kIoError,
  kConfigError,
};

const char* error_kind_name(ErrorKind kind);

// True for failures of input files / output paths / configuration, as opposed
// to violations of mathematical preconditions.
bool is_io_error(ErrorKind kind);

// All library failures throw this. The message always starts with the name of
// the failing operation so callers can report "<operation>: <kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& operation, const std::string& detail)
      : std::runtime_error(operation + ": " + error_kind_name(kind) + ": " + detail),
        kind_(kind),
        operation_(operation) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& operation() const noexcept { return operation_; }

 private:
  ErrorKind kind_;
  std::string operation_;
};

}  // namespace charcom

#endif  // CHARCOM_ERRORS_HPP_
