// Copyright 2026 The tqlocc Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tqlocc {

enum class ErrorCode {
  NotNormalized,
  NonFinite,
  IncompleteMeasurement,
  DecompositionFailed,
  NegativeDiscriminant,
  Inconsistent,
  NotGhzType,
  NotWType,
  NotFeasible,
  ZeroProbability,
  DegenerateInput,
  NotFound,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IncompleteMeasurement: return "IncompleteMeasurement";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotGhzType: return "NotGhzType";
    case ErrorCode::NotWType: return "NotWType";
    case ErrorCode::NotFeasible: return "NotFeasible";
    case ErrorCode::ZeroProbability: return "ZeroProbability";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace tqlocc
