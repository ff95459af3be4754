// src/error.cc

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

#include "vsm/error.h"

namespace vsm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDuplicateSegment: return "DuplicateSegment";
    case ErrorCode::kUnknownSpeaker: return "UnknownSpeaker";
    case ErrorCode::kUnknownSegment: return "UnknownSegment";
    case ErrorCode::kAmbiguousSegment: return "AmbiguousSegment";
    case ErrorCode::kSpeakerSetMismatch: return "SpeakerSetMismatch";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kNonFiniteScore: return "NonFiniteScore";
    case ErrorCode::kDuplicateTrial: return "DuplicateTrial";
    case ErrorCode::kKindMismatch: return "KindMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroNormVector: return "ZeroNormVector";
    case ErrorCode::kDegenerateLabels: return "DegenerateLabels";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyCell: return "EmptyCell";
    case ErrorCode::kTooFewSpeakers: return "TooFewSpeakers";
    case ErrorCode::kZeroDdiagOO: return "ZeroDdiagOO";
    case ErrorCode::kSpeakerOrderMismatch: return "SpeakerOrderMismatch";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kTooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace vsm
