// include/vsm/scores.h

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

#ifndef VSM_SCORES_H_
#define VSM_SCORES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vsm/cohort.h"

namespace vsm {

// Which pair of domains a score set or similarity matrix compares.
enum class MatrixKind { kOO, kOP, kPP };

std::string_view KindName(MatrixKind kind);  // "OO", "OP", "PP"
std::optional<MatrixKind> ParseKind(std::string_view name);  // any case

enum class Label { kImpostor, kTarget };

struct Trial {
  SegmentId left;
  SegmentId right;
  double raw_score = 0.0;
  Domain left_domain = Domain::kOriginal;
  Domain right_domain = Domain::kOriginal;
};

// A trial without its score: the pair to be compared.
struct TrialKey {
  SegmentId left;
  Domain left_domain;
  SegmentId right;
  Domain right_domain;
};

// Kind of comparison implied by two domains.
MatrixKind KindOf(Domain left, Domain right);

/// Trials of one kind with their target/impostor labels, parallel arrays.
/// Nothing here requires both classes to be present; calibration does.
struct ScoreSet {
  MatrixKind kind = MatrixKind::kOO;
  std::vector<Trial> trials;
  std::vector<Label> labels;

  std::size_t num_targets() const;
};

// Labels `trials` against `manifest` and checks that every trial is of
// `kind`, that both segments exist, that scores are finite and that no
// (left, right) pair is repeated.
ScoreSet MakeScoreSet(MatrixKind kind, std::vector<Trial> trials,
                      const CohortManifest &manifest);

// Parses a mixed score file, inferring each segment's domain from the
// manifest.  A segment id present in both domains cannot be resolved and
// raises AmbiguousSegment; use ParseScoreSet for such cohorts.  Returns the
// OO, OP and PP sets in that order (any of them may be empty).
std::array<ScoreSet, 3> ParseScores(std::string_view text,
                                    const CohortManifest &manifest);

// Parses a score file known to hold trials of a single kind.  For OP files
// `<original> <protected>` is tried first and `<protected> <original>`
// second.
ScoreSet ParseScoreSet(std::string_view text, const CohortManifest &manifest,
                       MatrixKind kind);

// Three-column writer; scores are printed in shortest round-trip form.
std::string WriteScores(std::span<const Trial> trials);

/// Segment embeddings of a fixed dimension, kept in insertion order.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

  // Throws DimensionMismatch, DuplicateSegment or NonFiniteScore.
  void Add(const SegmentId &segment, std::vector<double> values);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<SegmentId> &ids() const { return ids_; }

  // nullptr when absent.
  const std::vector<double> *Find(std::string_view segment) const;
  const std::vector<double> &row(std::size_t i) const { return rows_[i]; }

  bool operator==(const EmbeddingTable &other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SegmentId> ids_;
  std::vector<std::vector<double>> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

EmbeddingTable ParseEmbeddings(std::string_view text);
std::string WriteEmbeddings(const EmbeddingTable &table);

// raw_score = scale * cos(left, right).  Left segments are looked up in
// `left_table` and right segments in `right_table`.  Throws UnknownSegment
// or ZeroNormVector.
std::vector<Trial> ScoreCosine(const EmbeddingTable &left_table,
                               const EmbeddingTable &right_table,
                               std::span<const TrialKey> pairs, double scale);
std::vector<Trial> ScoreCosine(const EmbeddingTable &table,
                               std::span<const TrialKey> pairs, double scale);

}  // namespace vsm

#endif  // VSM_SCORES_H_
