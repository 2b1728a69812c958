// Copyright 2026 The mupir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mupir/error.h"

namespace mupir {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidDimension: return "invalid-dimension";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kInvalidDemand: return "invalid-demand";
    case ErrorCode::kUnsupportedRegime: return "unsupported-regime";
    case ErrorCode::kCoverage: return "coverage";
    case ErrorCode::kInfeasibleSwap: return "infeasible-swap";
    case ErrorCode::kUnresolvable: return "unresolvable-plan";
    case ErrorCode::kTooLarge: return "too-large-instance";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

}  // namespace mupir
