// Copyright 2026 The biomeval Authors
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

namespace biomeval {

// Every failure raised by the library carries one of these codes so callers
// (and the CLI exit-code mapping) can react without string matching.
enum class ErrorCode {
  kInvalidArgument,

  // fusion / similarity
  kMixedDimensions,
  kEmptySet,
  kBadWeights,
  kDuplicateName,
  kReservedName,
  kUnknownFusion,
  kZeroNorm,

  // metrics
  kEmptyClass,
  kNoMatedProbes,
  kNoNonMatedProbes,

  // protocols / stores
  kMissingTemplate,
  kDuplicateTemplateId,
  kDuplicateSubject,
  kEmptyFold,
  kClosedSetViolation,
  kTooFewFolds,
  kMixedKinds,
  kEmptyInput,

  // file formats
  kBadMagic,
  kUnsupportedVersion,
  kTruncatedFile,
  kDimMismatch,
  kRaggedRow,
  kNonNumeric,
  kEmptyFile,
  kSchemaMismatch,
  kBadValue,
  kIoFailure,

  // plotting
  kEmptySeries,
  kNonPositiveXOnLogScale,
};

const char* to_string(ErrorCode code);

class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }

  // The message without the "Code: " prefix, for rewrapping with context.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw EvalError(code, message);
}

}  // namespace biomeval
