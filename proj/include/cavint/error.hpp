// Copyright 2026 The cavint Authors
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

namespace cavint {

enum class ErrorCode {
  NonPositiveKappa,
  NegativeRate,
  NonFiniteParameter,
  DegenerateDressing,
  ZeroRelaxation,
  SingularCavity,
  NonFiniteState,
  DomainError,
  TruncationTooLarge,
  TruncationBreached,
  NoConvergence,
  InvalidArgument,
  ConfigError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::NonFiniteParameter: return "NonFiniteParameter";
    case ErrorCode::DegenerateDressing: return "DegenerateDressing";
    case ErrorCode::ZeroRelaxation: return "ZeroRelaxation";
    case ErrorCode::SingularCavity: return "SingularCavity";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TruncationTooLarge: return "TruncationTooLarge";
    case ErrorCode::TruncationBreached: return "TruncationBreached";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by bad input rather than a failed computation.
  bool is_usage_error() const noexcept {
    switch (code_) {
      case ErrorCode::NonPositiveKappa:
      case ErrorCode::NegativeRate:
      case ErrorCode::NonFiniteParameter:
      case ErrorCode::DegenerateDressing:
      case ErrorCode::InvalidArgument:
      case ErrorCode::ConfigError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace cavint
