// include/vsm/error.h

// Copyright 2026  The vsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VSM_ERROR_H_
#define VSM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vsm {

enum class ErrorCode {
  kEmptyInput,
  kDuplicateSegment,
  kUnknownSpeaker,
  kUnknownSegment,
  kAmbiguousSegment,
  kSpeakerSetMismatch,
  kMalformedLine,
  kNonFiniteScore,
  kDuplicateTrial,
  kKindMismatch,
  kDimensionMismatch,
  kZeroNormVector,
  kDegenerateLabels,
  kLengthMismatch,
  kEmptyCell,
  kTooFewSpeakers,
  kZeroDdiagOO,
  kSpeakerOrderMismatch,
  kOutOfRange,
  kInvalidConfig,
  kTooLargeForOracle,
  kIo,
};

/// Stable identifier used in machine-readable error output, e.g.
/// "MalformedLine".
std::string_view ErrorCodeName(ErrorCode code);

/// All data errors raised by the library.  `line()` is the 1-based input
/// line the error refers to, or 0 when it does not come from a text file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::size_t line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace vsm

#endif  // VSM_ERROR_H_
