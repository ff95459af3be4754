// src/calibration.cc

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

#include "vsm/calibration.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vsm/error.h"

namespace vsm {

double Logit(double p) { return std::log(p) - std::log1p(-p); }

CalibrationMap PavFit(std::span<const double> scores,
                      std::span<const Label> labels,
                      const CalibrationOptions &options) {
  if (scores.size() != labels.size())
    throw Error(ErrorCode::kLengthMismatch,
                "got " + std::to_string(scores.size()) + " scores but " +
                    std::to_string(labels.size()) + " labels");
  const std::size_t total = scores.size();
  std::size_t targets = 0;
  for (Label l : labels) targets += l == Label::kTarget;
  if (targets == 0 || targets == total)
    throw Error(ErrorCode::kDegenerateLabels,
                "calibration needs both target and impostor trials");

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Each stack entry is a pooled run of the sorted trials.  Tied scores
  // enter as one run so that they always share a posterior.
  struct Run {
    double low, high;
    double sum;
    std::size_t count;
  };
  std::vector<Run> stack;
  for (std::size_t i = 0; i < total;) {
    double s = scores[order[i]];
    Run run{s, s, 0.0, 0};
    for (; i < total && scores[order[i]] == s; ++i) {
      run.sum += labels[order[i]] == Label::kTarget ? 1.0 : 0.0;
      ++run.count;
    }
    stack.push_back(run);
    // Merge while the previous mean is not below the current one; sums and
    // counts are integers, so compare by cross-multiplication.
    while (stack.size() > 1) {
      Run &prev = stack[stack.size() - 2];
      Run &cur = stack.back();
      if (prev.sum * static_cast<double>(cur.count) <
          cur.sum * static_cast<double>(prev.count))
        break;
      prev.high = cur.high;
      prev.sum += cur.sum;
      prev.count += cur.count;
      stack.pop_back();
    }
  }

  double epsilon = options.epsilon.value_or(
      1.0 / (2.0 * (static_cast<double>(total) + 1.0)));
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw Error(ErrorCode::kInvalidConfig,
                "calibration epsilon must lie in (0, 0.5)");

  std::vector<CalibrationBlock> blocks;
  blocks.reserve(stack.size());
  for (const Run &run : stack) {
    double mean = run.sum / static_cast<double>(run.count);
    blocks.push_back({run.low, run.high, mean,
                      std::clamp(mean, epsilon, 1.0 - epsilon), run.count});
  }
  double prior = static_cast<double>(targets) / static_cast<double>(total);
  return CalibrationMap(std::move(blocks), Logit(prior), epsilon,
                        options.remove_prior);
}

std::size_t CalibrationMap::BlockFor(double score) const {
  // First block whose upper end is >= score.
  auto it = std::lower_bound(
      blocks_.begin(), blocks_.end(), score,
      [](const CalibrationBlock &b, double s) { return b.score_high < s; });
  if (it == blocks_.end()) return blocks_.size() - 1;
  std::size_t k = static_cast<std::size_t>(it - blocks_.begin());
  if (score >= it->score_low || k == 0) return k;
  // In the gap between blocks k-1 and k.
  double below = score - blocks_[k - 1].score_high;
  double above = it->score_low - score;
  return above < below ? k : k - 1;
}

CalibrationMap::Applied CalibrationMap::Apply(double score) const {
  std::size_t k = BlockFor(score);
  const CalibrationBlock &b = blocks_[k];
  bool inside = score >= b.score_low && score <= b.score_high;
  double llr = Logit(b.posterior) - (remove_prior_ ? prior_log_odds_ : 0.0);
  return {llr, inside};
}

CalibratedSet CalibrateSet(const ScoreSet &set,
                           const CalibrationOptions &options) {
  std::vector<double> scores;
  scores.reserve(set.trials.size());
  for (const Trial &t : set.trials) scores.push_back(t.raw_score);
  CalibrationMap map = [&] {
    try {
      return PavFit(scores, set.labels, options);
    } catch (const Error &e) {
      throw Error(e.code(), std::string(KindName(set.kind)) + " scores: " +
                                e.what());
    }
  }();

  CalibratedSet out;
  out.kind = set.kind;
  out.trials.reserve(set.trials.size());
  for (const Trial &t : set.trials) {
    CalibrationMap::Applied applied = map.Apply(t.raw_score);
    if (!applied.in_support) ++out.outside_support;
    out.trials.push_back(
        {t.left, t.right, applied.llr, t.left_domain, t.right_domain});
  }
  out.map = std::move(map);
  return out;
}

CalibratedSet PassThrough(const ScoreSet &set) {
  CalibratedSet out;
  out.kind = set.kind;
  out.trials.reserve(set.trials.size());
  for (const Trial &t : set.trials)
    out.trials.push_back(
        {t.left, t.right, t.raw_score, t.left_domain, t.right_domain});
  return out;
}

}  // namespace vsm
