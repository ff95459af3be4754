// include/vsm/text.h

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

#ifndef VSM_TEXT_H_
#define VSM_TEXT_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace vsm {

// Splits on runs of spaces and tabs.  A trailing '\r' is treated as
// whitespace so CRLF files parse the same as LF files.
std::vector<std::string_view> SplitFields(std::string_view line);

// Calls `fn(line_number, line)` for every line of `text` that contains at
// least one non-whitespace byte; line numbers are 1-based.
void ForEachLine(std::string_view text,
                 const std::function<void(std::size_t, std::string_view)> &fn);

enum class RealParse { kOk, kMalformed, kNonFinite };

// Strict decimal grammar: [+-]? (D+ ('.' D*)? | '.' D+) ([eE] [+-]? D+)?
// The tokens inf, infinity and nan (any case, optional sign) and values
// overflowing a double parse as kNonFinite; anything else is kMalformed.
RealParse ParseReal(std::string_view token, double *value);

// Shortest decimal form that reads back to the identical double.
std::string FormatShortest(double value);

// Fixed-point with `digits` decimals ("%.6f" style).
std::string FormatFixed(double value, int digits);

bool IsToken(std::string_view s);

}  // namespace vsm

#endif  // VSM_TEXT_H_
