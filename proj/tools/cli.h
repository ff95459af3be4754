// tools/cli.h

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

#ifndef VSM_TOOLS_CLI_H_
#define VSM_TOOLS_CLI_H_

#include <ostream>

namespace vsm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kData = 2;
inline constexpr int kInternal = 3;

// Entry point of the `vsm` tool; `out` receives the summary, `err` the
// usage messages and one JSON object per data error.
int Run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace vsm::cli

#endif  // VSM_TOOLS_CLI_H_
