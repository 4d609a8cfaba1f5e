// Copyright 2026 The cogsig Authors.
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

#include "cogsig/error.hpp"

namespace cogsig {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kNonMonotonicTimestamp: return "NonMonotonicTimestamp";
    case ErrorCode::kEmptyLog: return "EmptyLog";
    case ErrorCode::kInvalidResolution: return "InvalidResolution";
    case ErrorCode::kPrivacyModeActive: return "PrivacyModeActive";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kAlignmentFailure: return "AlignmentFailure";
    case ErrorCode::kTooFewPairs: return "TooFewPairs";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kEmptyHistogram: return "EmptyHistogram";
    case ErrorCode::kTooFewSessions: return "TooFewSessions";
    case ErrorCode::kSeriesTooShort: return "SeriesTooShort";
    case ErrorCode::kDegenerateSeries: return "DegenerateSeries";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIncompleteAnalysis: return "IncompleteAnalysis";
    case ErrorCode::kSerializationFailure: return "SerializationFailure";
    case ErrorCode::kInvalidResolutionList: return "InvalidResolutionList";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace cogsig
