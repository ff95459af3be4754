// src/pipeline.cc

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

#include "vsm/pipeline.h"

#include <future>

#include "vsm/error.h"

namespace vsm {

Evaluation EvaluateScoreSets(const CohortManifest &manifest,
                             const ScoreSet &oo, const ScoreSet &op,
                             const ScoreSet &pp,
                             const EvaluateOptions &options) {
  if (oo.kind != MatrixKind::kOO || op.kind != MatrixKind::kOP ||
      pp.kind != MatrixKind::kPP)
    throw Error(ErrorCode::kKindMismatch,
                "expected the OO, OP and PP score sets in that order");
  auto calibrate = [&options](const ScoreSet &set) {
    return options.pre_calibrated ? PassThrough(set)
                                  : CalibrateSet(set, options.calibration);
  };
  auto f_op = std::async(std::launch::async, calibrate, std::cref(op));
  auto f_pp = std::async(std::launch::async, calibrate, std::cref(pp));
  CalibratedSet c_oo = calibrate(oo);
  CalibratedSet c_op = f_op.get();
  CalibratedSet c_pp = f_pp.get();

  Evaluation out;
  out.matrices = BuildAll(manifest, c_oo, c_op, c_pp, options.similarity);
  out.report = Report(out.matrices.oo, out.matrices.op, out.matrices.pp,
                      options.set_name);
  out.calibrated = {std::move(c_oo), std::move(c_op), std::move(c_pp)};
  return out;
}

}  // namespace vsm
