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

#ifndef COGSIG_ERROR_HPP
#define COGSIG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cogsig {

enum class ErrorCode {
  kMalformedRecord,
  kNonMonotonicTimestamp,
  kEmptyLog,
  kInvalidResolution,
  kPrivacyModeActive,
  kPositionOutOfRange,
  kEmptyCorpus,
  kEmptyDocument,
  kAlignmentFailure,
  kTooFewPairs,
  kInvalidParameters,
  kEmptyHistogram,
  kTooFewSessions,
  kSeriesTooShort,
  kDegenerateSeries,
  kInvalidConfig,
  kIncompleteAnalysis,
  kSerializationFailure,
  kInvalidResolutionList,
  kIoError,
};

// Stable identifier used in machine-readable error output.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input with the 1-based line it was found on.
class RecordError : public Error {
 public:
  RecordError(ErrorCode code, std::size_t line, const std::string& reason)
      : Error(code, "line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cogsig

#endif  // COGSIG_ERROR_HPP
