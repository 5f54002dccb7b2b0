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

#include "biomeval/error.hpp"

namespace biomeval {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:        return "InvalidArgument";
    case ErrorCode::kMixedDimensions:        return "MixedDimensions";
    case ErrorCode::kEmptySet:               return "EmptySet";
    case ErrorCode::kBadWeights:             return "BadWeights";
    case ErrorCode::kDuplicateName:          return "DuplicateName";
    case ErrorCode::kReservedName:           return "ReservedName";
    case ErrorCode::kUnknownFusion:          return "UnknownFusion";
    case ErrorCode::kZeroNorm:               return "ZeroNorm";
    case ErrorCode::kEmptyClass:             return "EmptyClass";
    case ErrorCode::kNoMatedProbes:          return "NoMatedProbes";
    case ErrorCode::kNoNonMatedProbes:       return "NoNonMatedProbes";
    case ErrorCode::kMissingTemplate:        return "MissingTemplate";
    case ErrorCode::kDuplicateTemplateId:    return "DuplicateTemplateId";
    case ErrorCode::kDuplicateSubject:       return "DuplicateSubject";
    case ErrorCode::kEmptyFold:              return "EmptyFold";
    case ErrorCode::kClosedSetViolation:     return "ClosedSetViolation";
    case ErrorCode::kTooFewFolds:            return "TooFewFolds";
    case ErrorCode::kMixedKinds:             return "MixedKinds";
    case ErrorCode::kEmptyInput:             return "EmptyInput";
    case ErrorCode::kBadMagic:               return "BadMagic";
    case ErrorCode::kUnsupportedVersion:     return "UnsupportedVersion";
    case ErrorCode::kTruncatedFile:          return "TruncatedFile";
    case ErrorCode::kDimMismatch:            return "DimMismatch";
    case ErrorCode::kRaggedRow:              return "RaggedRow";
    case ErrorCode::kNonNumeric:             return "NonNumeric";
    case ErrorCode::kEmptyFile:              return "EmptyFile";
    case ErrorCode::kSchemaMismatch:         return "SchemaMismatch";
    case ErrorCode::kBadValue:               return "BadValue";
    case ErrorCode::kIoFailure:              return "IoFailure";
    case ErrorCode::kEmptySeries:            return "EmptySeries";
    case ErrorCode::kNonPositiveXOnLogScale: return "NonPositiveXOnLogScale";
  }
  return "UnknownError";
}

}  // namespace biomeval
