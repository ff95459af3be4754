// include/vsm/pipeline.h

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

#ifndef VSM_PIPELINE_H_
#define VSM_PIPELINE_H_

#include <array>
#include <string>

#include "vsm/calibration.h"
#include "vsm/metrics.h"
#include "vsm/scores.h"
#include "vsm/similarity.h"

namespace vsm {

struct EvaluateOptions {
  bool pre_calibrated = false;  // use raw scores as llrs, skip PAV
  CalibrationOptions calibration;
  SimilarityOptions similarity;
  std::string set_name;
};

struct Evaluation {
  std::array<CalibratedSet, 3> calibrated;  // OO, OP, PP
  MatrixTriple matrices;
  MetricsReport report;
};

// Calibrates the OO, OP and PP sets independently (concurrently), builds the
// three matrices and computes the metrics.
Evaluation EvaluateScoreSets(const CohortManifest &manifest,
                             const ScoreSet &oo, const ScoreSet &op,
                             const ScoreSet &pp,
                             const EvaluateOptions &options = {});

}  // namespace vsm

#endif  // VSM_PIPELINE_H_
