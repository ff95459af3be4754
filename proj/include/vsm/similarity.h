// include/vsm/similarity.h

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

#ifndef VSM_SIMILARITY_H_
#define VSM_SIMILARITY_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vsm/calibration.h"
#include "vsm/cohort.h"
#include "vsm/scores.h"

namespace vsm {

// (1 + exp(-y))^-1, evaluated without overflow for large |y|.
double Sigmoid(double y);

/// N x N grid of speaker-level similarities in posterior space, indexed by
/// the manifest's speaker order.  `pair_counts` holds, per cell, how many
/// segment pairs were averaged; it is empty for matrices read back from a
/// table file.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(MatrixKind kind, std::vector<SpeakerId> speakers,
                   std::vector<double> cells,
                   std::vector<std::size_t> pair_counts = {});

  MatrixKind kind() const { return kind_; }
  std::size_t n() const { return speakers_.size(); }
  const std::vector<SpeakerId> &speakers() const { return speakers_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * n() + j]; }
  std::size_t pair_count(std::size_t i, std::size_t j) const {
    return pair_counts_[i * n() + j];
  }
  bool has_pair_counts() const { return !pair_counts_.empty(); }
  const std::vector<double> &cells() const { return cells_; }

 private:
  MatrixKind kind_ = MatrixKind::kOO;
  std::vector<SpeakerId> speakers_;
  std::vector<double> cells_;
  std::vector<std::size_t> pair_counts_;
};

struct SimilarityOptions {
  // Also drop OP pairs whose original and protected segment ids are equal
  // (cohorts where a protected segment keeps its original's id).
  bool exclude_op_same_id = false;
};

/**
   Builds one similarity matrix from calibrated trials:

     S(i, j) = sigmoid(mean of llr(x, y) over admissible pairs)

   with x a segment of speaker i and y a segment of speaker j.  For OO and PP
   the row and column segments come from the same domain: a segment compared
   with itself is not admissible, and (a, b) and (b, a) are the same pair,
   whose llrs are averaged into a single contribution.  For OP, x is always
   the original-domain segment and y the protected one.

   The divisor is the number of pairs actually present, recorded in
   pair_counts; a cell without any admissible pair throws EmptyCell.
*/
SimilarityMatrix BuildMatrix(MatrixKind kind, const CohortManifest &manifest,
                             std::span<const CalibratedTrial> trials,
                             const SimilarityOptions &options = {});

struct MatrixTriple {
  SimilarityMatrix oo, op, pp;
};

// Builds M_OO, M_OP and M_PP concurrently.  M_PO is M_OP transposed and is
// not materialised.
MatrixTriple BuildAll(const CohortManifest &manifest, const CalibratedSet &oo,
                      const CalibratedSet &op, const CalibratedSet &pp,
                      const SimilarityOptions &options = {});

// Table format: a header line `<kind> <spk_1> ... <spk_N>`, then one line
// per row `<spk_i> <S(i,1)> ... <S(i,N)>`, cells fixed at 6 decimals,
// fields separated by a single tab.
std::string ExportMatrix(const SimilarityMatrix &m);

// Reads an exported table.  Cells must lie in [0, 1].
SimilarityMatrix ParseMatrix(std::string_view text);

}  // namespace vsm

#endif  // VSM_SIMILARITY_H_
