// include/vsm/numeric.h

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

#ifndef VSM_NUMERIC_H_
#define VSM_NUMERIC_H_

#include <span>

namespace vsm {

// Correctly rounded sum of finite doubles (Shewchuk's exact partials, as in
// Python's math.fsum).  The result does not depend on the order of `values`.
double ExactSum(std::span<const double> values);

// Correctly rounded mean, a function of the exact mean only (so a list
// and the same list repeated give the same value); `values` must be
// non-empty.
double ExactMean(std::span<const double> values);

}  // namespace vsm

#endif  // VSM_NUMERIC_H_
