// include/vsm/calibration.h

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

#ifndef VSM_CALIBRATION_H_
#define VSM_CALIBRATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vsm/scores.h"

namespace vsm {

struct CalibrationOptions {
  // Posterior clamp.  Unset means 1 / (2 (T + 1)) for T fitted trials.
  std::optional<double> epsilon;
  // Subtract the empirical prior log-odds so that llrs are prior-free.
  bool remove_prior = true;
};

struct CalibrationBlock {
  double score_low = 0.0;
  double score_high = 0.0;
  double mean = 0.0;       // least-squares isotonic value (fraction of targets)
  double posterior = 0.0;  // `mean` clamped to [epsilon, 1 - epsilon]
  std::size_t count = 0;
};

/**
   Monotone step function from raw score to calibrated llr, fitted by
   pool-adjacent-violators.  Blocks are ascending and disjoint in score;
   every fitted score lies inside exactly one [score_low, score_high].
*/
class CalibrationMap {
 public:
  struct Applied {
    double llr;
    bool in_support;  // false when the score fell outside every block
  };

  CalibrationMap(std::vector<CalibrationBlock> blocks, double prior_log_odds,
                 double epsilon, bool remove_prior)
      : blocks_(std::move(blocks)),
        prior_log_odds_(prior_log_odds),
        epsilon_(epsilon),
        remove_prior_(remove_prior) {}

  const std::vector<CalibrationBlock> &blocks() const { return blocks_; }
  double prior_log_odds() const { return prior_log_odds_; }
  double epsilon() const { return epsilon_; }

  // llr = logit(posterior) - prior_log_odds.  A score outside the training
  // support is mapped through the nearest block (the lower one on a tie)
  // and reported with in_support = false.
  Applied Apply(double score) const;

  // Index of the block used for `score`.
  std::size_t BlockFor(double score) const;

 private:
  std::vector<CalibrationBlock> blocks_;
  double prior_log_odds_;
  double epsilon_;
  bool remove_prior_;
};

double Logit(double p);

// Throws LengthMismatch or DegenerateLabels.
CalibrationMap PavFit(std::span<const double> scores,
                      std::span<const Label> labels,
                      const CalibrationOptions &options = {});

struct CalibratedTrial {
  SegmentId left;
  SegmentId right;
  double llr = 0.0;
  Domain left_domain = Domain::kOriginal;
  Domain right_domain = Domain::kOriginal;
};

struct CalibratedSet {
  MatrixKind kind = MatrixKind::kOO;
  std::vector<CalibratedTrial> trials;
  std::optional<CalibrationMap> map;  // empty for pre-calibrated input
  std::size_t outside_support = 0;
};

// Oracle calibration: fit on `set` and apply to the same trials.
CalibratedSet CalibrateSet(const ScoreSet &set,
                           const CalibrationOptions &options = {});

// Treats raw scores as llrs that are already calibrated.
CalibratedSet PassThrough(const ScoreSet &set);

}  // namespace vsm

#endif  // VSM_CALIBRATION_H_
