// src/oracle.cc

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

// Reference implementations used to check the calibration and similarity
// modules.  Nothing here calls into either of them.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vsm/error.h"
#include "vsm/synth.h"

namespace vsm {

namespace {

// Sorted distinct scores with their label sums and counts, plus the group
// of every input trial.
struct Groups {
  std::vector<double> sum;
  std::vector<double> count;
  std::vector<std::size_t> of_trial;
};

Groups GroupTies(std::span<const double> scores, std::span<const Label> labels) {
  if (scores.size() != labels.size() || scores.empty())
    throw Error(ErrorCode::kLengthMismatch, "oracle needs matching, non-empty inputs");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  Groups g;
  g.of_trial.resize(scores.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t t = order[k];
    if (k == 0 || scores[t] != scores[order[k - 1]]) {
      g.sum.push_back(0.0);
      g.count.push_back(0.0);
    }
    g.sum.back() += labels[t] == Label::kTarget ? 1.0 : 0.0;
    g.count.back() += 1.0;
    g.of_trial[t] = g.sum.size() - 1;
  }
  return g;
}

std::vector<double> PerTrial(const Groups &g, const std::vector<double> &fit) {
  std::vector<double> out(g.of_trial.size());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = fit[g.of_trial[t]];
  return out;
}

double Cosine(const std::vector<double> &a, const std::vector<double> &b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
  for (double x : a) na += x * x;
  for (double x : b) nb += x * x;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

std::vector<double> ExhaustiveIsotonic(std::span<const double> scores,
                                       std::span<const Label> labels) {
  Groups g = GroupTies(scores, labels);
  const std::size_t n = g.sum.size();
  if (n > 20)
    throw Error(ErrorCode::kTooLargeForOracle,
                "exhaustive isotonic search is limited to 20 distinct scores");

  double best_sse = std::numeric_limits<double>::infinity();
  std::vector<double> best(n), fit(n);
  // Bit b of `cuts` set = a block boundary after group b.
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    double sse = 0.0, prev_mean = -1.0;
    bool monotone = true;
    std::size_t start = 0;
    for (std::size_t k = 0; k < n && monotone; ++k) {
      bool boundary = k == n - 1 || (cuts >> k) & 1u;
      if (!boundary) continue;
      double s = 0.0, c = 0.0;
      for (std::size_t m = start; m <= k; ++m) {
        s += g.sum[m];
        c += g.count[m];
      }
      double mean = s / c;
      if (mean < prev_mean) monotone = false;
      // Labels are 0/1, so the block's sum of squares equals its sum.
      sse += s - s * s / c;
      for (std::size_t m = start; m <= k; ++m) fit[m] = mean;
      prev_mean = mean;
      start = k + 1;
    }
    if (monotone && sse < best_sse - 1e-12) {
      best_sse = sse;
      best = fit;
    }
  }
  return PerTrial(g, best);
}

std::vector<double> MinMaxIsotonic(std::span<const double> scores,
                                   std::span<const Label> labels) {
  Groups g = GroupTies(scores, labels);
  const std::size_t n = g.sum.size();
  std::vector<double> ps(n + 1, 0.0), pc(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    ps[k + 1] = ps[k] + g.sum[k];
    pc[k + 1] = pc[k] + g.count[k];
  }
  std::vector<double> fit(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a <= i; ++a) {
      double lowest = std::numeric_limits<double>::infinity();
      for (std::size_t b = i; b < n; ++b)
        lowest = std::min(lowest, (ps[b + 1] - ps[a]) / (pc[b + 1] - pc[a]));
      best = std::max(best, lowest);
    }
    fit[i] = best;
  }
  return PerTrial(g, fit);
}

MatrixTriple BruteForceSimilarity(const SynthCohort &cohort, double scale) {
  const CohortManifest &manifest = cohort.manifest;
  const std::size_t n = manifest.num_speakers();
  for (std::size_t s = 0; s < n; ++s)
    if (n > 4 || manifest.SegmentsOf(s, Domain::kOriginal).size() > 3 ||
        manifest.SegmentsOf(s, Domain::kProtected).size() > 3)
      throw Error(ErrorCode::kTooLargeForOracle,
                  "brute-force similarity is limited to 4 speakers with at "
                  "most 3 segments each");

  // Row r of both tables; speaker_of_row follows the table order.
  const std::size_t rows = cohort.embeddings_o.size();
  std::vector<std::size_t> speaker_of_row(rows);
  {
    std::size_t r = 0;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t u = 0; u < manifest.SegmentsOf(s, Domain::kOriginal).size(); ++u)
        speaker_of_row[r++] = s;
  }

  auto run = [&](MatrixKind kind) {
    const EmbeddingTable &left =
        kind == MatrixKind::kPP ? cohort.embeddings_p : cohort.embeddings_o;
    const EmbeddingTable &right =
        kind == MatrixKind::kOO ? cohort.embeddings_o : cohort.embeddings_p;

    // Every ordered pair of rows (a, b), a != b, is a trial.
    std::vector<double> scores;
    std::vector<Label> labels;
    std::vector<std::pair<std::size_t, std::size_t>> pair_of;
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < rows; ++b) {
        if (a == b) continue;
        scores.push_back(scale * Cosine(left.row(a), right.row(b)));
        labels.push_back(speaker_of_row[a] == speaker_of_row[b] ? Label::kTarget
                                                                : Label::kImpostor);
        pair_of.emplace_back(a, b);
      }

    std::vector<double> fit = MinMaxIsotonic(scores, labels);
    const double total = static_cast<double>(scores.size());
    double targets = 0.0;
    for (Label l : labels) targets += l == Label::kTarget;
    const double eps = 1.0 / (2.0 * (total + 1.0));
    const double prior = std::log(targets / total) - std::log(1.0 - targets / total);

    std::vector<std::vector<double>> llr(rows, std::vector<double>(rows, 0.0));
    for (std::size_t t = 0; t < fit.size(); ++t) {
      double p = std::min(std::max(fit[t], eps), 1.0 - eps);
      llr[pair_of[t].first][pair_of[t].second] =
          std::log(p) - std::log(1.0 - p) - prior;
    }

    std::vector<double> cells(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0, count = 0.0;
        for (std::size_t a = 0; a < rows; ++a) {
          if (speaker_of_row[a] != i) continue;
          for (std::size_t b = 0; b < rows; ++b) {
            if (speaker_of_row[b] != j || a == b) continue;
            // Within one domain (a, b) and (b, a) are one symmetric pair.
            double v = kind == MatrixKind::kOP
                           ? llr[a][b]
                           : 0.5 * (llr[a][b] + llr[b][a]);
            sum += v;
            count += 1.0;
          }
        }
        cells[i * n + j] = 1.0 / (1.0 + std::exp(-sum / count));
      }
    return SimilarityMatrix(kind, manifest.speaker_order(), std::move(cells));
  };
  return {run(MatrixKind::kOO), run(MatrixKind::kOP), run(MatrixKind::kPP)};
}

}  // namespace vsm
