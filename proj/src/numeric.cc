// src/numeric.cc

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

#include "vsm/numeric.h"

#include <bit>
#include <cassert>
#include <cstdint>
#include <cmath>
#include <vector>

namespace vsm {

double ExactSum(std::span<const double> values) {
  std::vector<double> partials;
  for (double x : values) {
    std::size_t i = 0;
    for (double y : partials) {
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      double hi = x + y;
      double lo = y - (hi - x);
      if (lo != 0.0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }

  std::size_t n = partials.size();
  if (n == 0) return 0.0;
  double hi = partials[--n];
  double lo = 0.0;
  while (n > 0) {
    double x = hi;
    double y = partials[--n];
    hi = x + y;
    double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  // Round half-even across the remaining partials.
  if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) ||
                (lo > 0.0 && partials[n - 1] > 0.0))) {
    double y = lo * 2.0;
    double x = hi + y;
    double yr = x - hi;
    if (y == yr) hi = x;
  }
  return hi;
}

namespace {

bool IsEven(double x) { return (std::bit_cast<std::uint64_t>(x) & 1) == 0; }

// Sign of sum(values) - n * (c + h), evaluated exactly: both products are
// split into a rounded part and its fma remainder.
int CompareScaled(std::span<const double> values, double n, double c,
                  double h) {
  std::vector<double> terms(values.begin(), values.end());
  for (double v : {c, h}) {
    double p = n * v;
    terms.push_back(-p);
    terms.push_back(-std::fma(n, v, -p));
  }
  double s = ExactSum(terms);
  return (s > 0.0) - (s < 0.0);
}

}  // namespace

double ExactMean(std::span<const double> values) {
  assert(!values.empty());
  if (values.size() == 1) return values[0];
  const double n = static_cast<double>(values.size());
  double q = ExactSum(values) / n;
  // q is within an ulp or so of the true mean; step to the correctly
  // rounded neighbour by comparing against the midpoints exactly.
  for (;;) {
    double up = std::nextafter(q, HUGE_VAL);
    double down = std::nextafter(q, -HUGE_VAL);
    int above = CompareScaled(values, n, q, (up - q) / 2);
    if (above > 0) {
      q = up;
      continue;
    }
    if (above == 0) return IsEven(q) ? q : up;
    int below = CompareScaled(values, n, q, -(q - down) / 2);
    if (below < 0) {
      q = down;
      continue;
    }
    if (below == 0) return IsEven(q) ? q : down;
    return q;
  }
}

}  // namespace vsm
