/*
 * Copyright 2026 The fusionkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FUSIONKIT_ERROR_HPP
#define FUSIONKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionkit {

/// Failure categories raised by the library. Checks that can legitimately
/// fail (saturation, axioms, realization) return reports instead of throwing.
enum class ErrorCode {
  ParseError,
  InvalidArgument,
  CapExceeded,
  NotASubgroup,
  NotSylow,
  InvalidFusion,
  MismatchedSylow,
  NotComplement,
  IllDefinedComposition,
  NotAChain,
  FixedPointInvolution,
  MismatchedEndpoints,
  Disconnected,
  NotATree,
  NotClosedUnderConjugation,
  NoFullyNormalizedMember,
  MissingRadical,
  DoesNotGenerate,
  NotOddPrime,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fusionkit

#endif  // FUSIONKIT_ERROR_HPP
