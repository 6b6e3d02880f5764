// Copyright 2026 The dioph Authors
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

#ifndef DIOPH_ERROR_HPP
#define DIOPH_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

/// Every failure the library reports carries one of these codes. The CLI
/// prints the name verbatim, so names are part of the external interface.
enum class ErrorCode : std::uint8_t {
  InvalidArgument,
  ParseError,
  DepthExceeded,
  PrecisionExhausted,
  NotIrrational,
  TargetOutOfRange,
  BudgetExhausted,
  NotDenseCandidate,
  InvalidG,
  DegenerateG,
  InfeasibleSchedule,
  TooSmall,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotIrrational: return "NotIrrational";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NotDenseCandidate: return "NotDenseCandidate";
    case ErrorCode::InvalidG: return "InvalidG";
    case ErrorCode::DegenerateG: return "DegenerateG";
    case ErrorCode::InfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::TooSmall: return "TooSmall";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::InvalidArgument, message);
}

inline void require(bool condition, const char* message) {
  if (!condition) fail(ErrorCode::InvalidArgument, message);
}

/// Working-precision limits for certified evaluation. Precision is always a
/// per-call parameter; nothing in the library keeps global precision state.
struct PrecisionPolicy {
  std::uint32_t start_bits = 64;
  std::uint32_t cap_bits = 1u << 16;
};

}  // namespace dioph

#endif  // DIOPH_ERROR_HPP
