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

#include "charcom/errors.hpp"

namespace charcom {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotUnitary: return "NotUnitary";
    case ErrorKind::kGroupNotClosed: return "GroupNotClosed";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kElementNotFound: return "ElementNotFound";
    case ErrorKind::kDegenerateEigenproblem: return "DegenerateEigenproblem";
    case ErrorKind::kBlockSplitFailed: return "BlockSplitFailed";
    case ErrorKind::kMemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorKind::kNonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::kNotAbelian: return "NotAbelian";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kWidthExceeded: return "WidthExceeded";
    case ErrorKind::kInvalidEdge: return "InvalidEdge";
    case ErrorKind::kNotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::kInvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kConfigError: return "ConfigError";
  }
  return "UnknownError";
}

bool is_io_error(ErrorKind kind) {
  return kind == ErrorKind::kIoError || kind == ErrorKind::kConfigError;
}

}  // namespace charcom
