// src/metrics.cc

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

#include "vsm/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

#include "vsm/error.h"
#include "vsm/numeric.h"

namespace vsm {

double DDiag(const SimilarityMatrix &m) {
  const std::size_t n = m.n();
  if (n < 2)
    throw Error(ErrorCode::kTooFewSpeakers,
                "diagonal dominance needs at least two speakers");
  std::vector<double> diagonal, off_diagonal;
  diagonal.reserve(n);
  off_diagonal.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      (i == j ? diagonal : off_diagonal).push_back(m.at(i, j));
  return std::fabs(ExactMean(diagonal) - ExactMean(off_diagonal));
}

std::string_view MetricFlagName(MetricFlag flag) {
  switch (flag) {
    case MetricFlag::kAssumptionViolatedOPgtOO: return "AssumptionViolatedOPgtOO";
    case MetricFlag::kZeroDdiagOO: return "ZeroDdiagOO";
    case MetricFlag::kZeroDdiagPP: return "ZeroDdiagPP";
  }
  return "Unknown";
}

DeIdResult DeId(double ddiag_oo, double ddiag_op) {
  if (!(ddiag_oo > 0.0))
    throw Error(ErrorCode::kZeroDdiagOO,
                "DeID is undefined when D_diag(M_OO) is not positive");
  return {(1.0 - ddiag_op / ddiag_oo) * 100.0, ddiag_op > ddiag_oo};
}

GainResult GainVd(double ddiag_oo, double ddiag_pp) {
  if (!(ddiag_oo > 0.0))
    throw Error(ErrorCode::kZeroDdiagOO,
                "G_VD is undefined when D_diag(M_OO) is not positive");
  if (ddiag_pp == 0.0)
    return {-std::numeric_limits<double>::infinity(), true};
  return {10.0 * std::log10(ddiag_pp / ddiag_oo), false};
}

bool MetricsReport::HasFlag(MetricFlag flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

MetricsReport Report(const SimilarityMatrix &oo, const SimilarityMatrix &op,
                     const SimilarityMatrix &pp, std::string set_name) {
  if (oo.kind() != MatrixKind::kOO || op.kind() != MatrixKind::kOP ||
      pp.kind() != MatrixKind::kPP)
    throw Error(ErrorCode::kKindMismatch,
                "report expects M_OO, M_OP and M_PP in that order");
  if (oo.speakers() != op.speakers() || oo.speakers() != pp.speakers())
    throw Error(ErrorCode::kSpeakerOrderMismatch,
                "the three matrices do not share one speaker order");

  MetricsReport r;
  r.set_name = std::move(set_name);
  r.n_speakers = oo.n();
  r.ddiag_oo = DDiag(oo);
  r.ddiag_op = DDiag(op);
  r.ddiag_pp = DDiag(pp);
  if (r.ddiag_oo > 0.0) {
    DeIdResult deid = DeId(r.ddiag_oo, r.ddiag_op);
    GainResult gain = GainVd(r.ddiag_oo, r.ddiag_pp);
    r.deid_percent = deid.percent;
    r.gvd_db = gain.db;
    if (deid.assumption_violated)
      r.flags.push_back(MetricFlag::kAssumptionViolatedOPgtOO);
  } else {
    r.flags.push_back(MetricFlag::kZeroDdiagOO);
  }
  if (r.ddiag_pp == 0.0) r.flags.push_back(MetricFlag::kZeroDdiagPP);
  return r;
}

std::string ReportToJson(const MetricsReport &report) {
  auto round6 = [](double v) {
    double r = std::round(v * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;  // no "-0.0"
  };
  nlohmann::ordered_json j;
  j["set_name"] = report.set_name;
  j["n_speakers"] = report.n_speakers;
  j["ddiag_oo"] = round6(report.ddiag_oo);
  j["ddiag_op"] = round6(report.ddiag_op);
  j["ddiag_pp"] = round6(report.ddiag_pp);
  if (report.deid_percent)
    j["deid_percent"] = round6(*report.deid_percent);
  else
    j["deid_percent"] = nullptr;
  if (!report.gvd_db)
    j["gvd_db"] = nullptr;
  else if (std::isinf(*report.gvd_db))
    j["gvd_db"] = "-inf";
  else
    j["gvd_db"] = round6(*report.gvd_db);
  auto flags = nlohmann::ordered_json::array();
  for (MetricFlag f : report.flags) flags.push_back(std::string(MetricFlagName(f)));
  j["flags"] = std::move(flags);
  return j.dump(2) + "\n";
}

}  // namespace vsm
