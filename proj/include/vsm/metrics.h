// include/vsm/metrics.h

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

#ifndef VSM_METRICS_H_
#define VSM_METRICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsm/similarity.h"

namespace vsm {

// |mean of the diagonal - mean of the off-diagonal|.  0 for a constant
// matrix, 1 for an identity pattern.  Throws TooFewSpeakers when n < 2.
double DDiag(const SimilarityMatrix &m);

enum class MetricFlag {
  kAssumptionViolatedOPgtOO,
  kZeroDdiagOO,
  kZeroDdiagPP,
};

std::string_view MetricFlagName(MetricFlag flag);

struct DeIdResult {
  double percent;
  // D_diag(M_OP) > D_diag(M_OO): the value is negative and not clamped.
  bool assumption_violated;
};

// (1 - ddiag_op / ddiag_oo) * 100.  Throws ZeroDdiagOO unless ddiag_oo > 0.
DeIdResult DeId(double ddiag_oo, double ddiag_op);

struct GainResult {
  double db;  // -infinity when ddiag_pp == 0
  bool zero_pp;
};

// 10 log10(ddiag_pp / ddiag_oo).  Throws ZeroDdiagOO unless ddiag_oo > 0.
GainResult GainVd(double ddiag_oo, double ddiag_pp);

struct MetricsReport {
  std::string set_name;
  std::size_t n_speakers = 0;
  double ddiag_oo = 0.0;
  double ddiag_op = 0.0;
  double ddiag_pp = 0.0;
  std::optional<double> deid_percent;  // absent when ddiag_oo == 0
  std::optional<double> gvd_db;        // absent when ddiag_oo == 0
  std::vector<MetricFlag> flags;       // in enum order, no repeats

  bool HasFlag(MetricFlag flag) const;
};

// Throws KindMismatch or SpeakerOrderMismatch.  A zero D_diag(M_OO) is
// reported through the flag rather than thrown.
MetricsReport Report(const SimilarityMatrix &oo, const SimilarityMatrix &op,
                     const SimilarityMatrix &pp, std::string set_name = "");

// Keys in fixed order: set_name, n_speakers, ddiag_oo, ddiag_op, ddiag_pp,
// deid_percent, gvd_db, flags.  Reals are rounded to 1e-6; gvd_db is the
// string "-inf" for the zero-distinctiveness sentinel and null when undefined.
std::string ReportToJson(const MetricsReport &report);

}  // namespace vsm

#endif  // VSM_METRICS_H_
