// src/similarity.cc

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

#include "vsm/similarity.h"

#include <cmath>
#include <future>
#include <unordered_map>

#include "vsm/error.h"
#include "vsm/numeric.h"
#include "vsm/text.h"

namespace vsm {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<std::size_t, std::size_t> &p) const {
    return std::hash<std::size_t>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
  }
};

}  // namespace

double Sigmoid(double y) {
  if (y >= 0.0) return 1.0 / (1.0 + std::exp(-y));
  double e = std::exp(y);
  return e / (1.0 + e);
}

SimilarityMatrix::SimilarityMatrix(MatrixKind kind,
                                   std::vector<SpeakerId> speakers,
                                   std::vector<double> cells,
                                   std::vector<std::size_t> pair_counts)
    : kind_(kind),
      speakers_(std::move(speakers)),
      cells_(std::move(cells)),
      pair_counts_(std::move(pair_counts)) {
  const std::size_t n = speakers_.size();
  if (cells_.size() != n * n ||
      (!pair_counts_.empty() && pair_counts_.size() != n * n))
    throw Error(ErrorCode::kLengthMismatch,
                "similarity matrix storage does not match its speaker count");
}

SimilarityMatrix BuildMatrix(MatrixKind kind, const CohortManifest &manifest,
                             std::span<const CalibratedTrial> trials,
                             const SimilarityOptions &options) {
  const std::size_t n = manifest.num_speakers();
  const auto &entries = manifest.entries();

  // Canonical segment pair -> llrs seen for it (both orientations).
  std::unordered_map<std::pair<std::size_t, std::size_t>, std::vector<double>,
                     PairHash>
      pairs;
  for (const CalibratedTrial &t : trials) {
    if (KindOf(t.left_domain, t.right_domain) != kind)
      throw Error(ErrorCode::kKindMismatch,
                  "trial '" + t.left.value + "' vs '" + t.right.value +
                      "' does not belong in M_" + std::string(KindName(kind)));
    if (!std::isfinite(t.llr))
      throw Error(ErrorCode::kNonFiniteScore,
                  "llr of trial '" + t.left.value + "' vs '" + t.right.value +
                      "' is not finite");
    auto l = manifest.EntryIndex(t.left.value, t.left_domain);
    auto r = manifest.EntryIndex(t.right.value, t.right_domain);
    if (!l || !r)
      throw Error(ErrorCode::kUnknownSegment,
                  "segment '" + (l ? t.right.value : t.left.value) +
                      "' is not in the manifest");
    std::size_t a = *l, b = *r;
    if (kind == MatrixKind::kOP) {
      if (t.left_domain == Domain::kProtected) std::swap(a, b);
      if (options.exclude_op_same_id &&
          entries[a].segment == entries[b].segment)
        continue;
    } else {
      if (a == b) continue;  // a segment against itself
      if (a > b) std::swap(a, b);
    }
    pairs[{a, b}].push_back(t.llr);
  }

  std::vector<std::vector<double>> contributions(n * n);
  for (const auto &[key, llrs] : pairs) {
    double llr = llrs.size() == 1 ? llrs.front() : ExactMean(llrs);
    std::size_t i = manifest.SpeakerOfEntry(key.first);
    std::size_t j = manifest.SpeakerOfEntry(key.second);
    contributions[i * n + j].push_back(llr);
    if (kind != MatrixKind::kOP && i != j)
      contributions[j * n + i].push_back(llr);
  }

  std::vector<double> cells(n * n);
  std::vector<std::size_t> counts(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto &values = contributions[i * n + j];
      if (values.empty())
        throw Error(ErrorCode::kEmptyCell,
                    "M_" + std::string(KindName(kind)) + " cell (" +
                        std::to_string(i) + ", " + std::to_string(j) +
                        ") for speakers '" + manifest.speaker_order()[i].value +
                        "' and '" + manifest.speaker_order()[j].value +
                        "' has no admissible trials");
      cells[i * n + j] = Sigmoid(ExactMean(values));
      counts[i * n + j] = values.size();
    }
  }
  return SimilarityMatrix(kind, manifest.speaker_order(), std::move(cells),
                          std::move(counts));
}

MatrixTriple BuildAll(const CohortManifest &manifest, const CalibratedSet &oo,
                      const CalibratedSet &op, const CalibratedSet &pp,
                      const SimilarityOptions &options) {
  if (oo.kind != MatrixKind::kOO || op.kind != MatrixKind::kOP ||
      pp.kind != MatrixKind::kPP)
    throw Error(ErrorCode::kKindMismatch,
                "BuildAll expects the OO, OP and PP sets in that order");
  auto build = [&](const CalibratedSet &set) {
    return BuildMatrix(set.kind, manifest, set.trials, options);
  };
  auto f_op = std::async(std::launch::async, build, std::cref(op));
  auto f_pp = std::async(std::launch::async, build, std::cref(pp));
  SimilarityMatrix m_oo = build(oo);
  return {std::move(m_oo), f_op.get(), f_pp.get()};
}

std::string ExportMatrix(const SimilarityMatrix &m) {
  std::string out(KindName(m.kind()));
  for (const SpeakerId &s : m.speakers()) {
    out += '\t';
    out += s.value;
  }
  out += '\n';
  for (std::size_t i = 0; i < m.n(); ++i) {
    out += m.speakers()[i].value;
    for (std::size_t j = 0; j < m.n(); ++j) {
      out += '\t';
      out += FormatFixed(m.at(i, j), 6);
    }
    out += '\n';
  }
  return out;
}

SimilarityMatrix ParseMatrix(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::size_t> line_numbers;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    rows.push_back(SplitFields(line));
    line_numbers.push_back(line_no);
  });
  if (rows.empty()) throw Error(ErrorCode::kEmptyInput, "matrix table is empty");

  const auto &header = rows.front();
  auto kind = ParseKind(header.front());
  if (!kind)
    throw Error(ErrorCode::kMalformedLine,
                "line 1: header must start with OO, OP or PP", line_numbers[0]);
  std::vector<SpeakerId> speakers;
  for (std::size_t k = 1; k < header.size(); ++k)
    speakers.push_back(SpeakerId{std::string(header[k])});
  const std::size_t n = speakers.size();
  if (n == 0 || rows.size() != n + 1)
    throw Error(ErrorCode::kMalformedLine,
                "matrix table must have one row per header speaker",
                line_numbers[0]);

  std::vector<double> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &row = rows[i + 1];
    std::size_t line_no = line_numbers[i + 1];
    if (row.size() != n + 1 || row[0] != speakers[i].value)
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) + ": expected row for '" +
                      speakers[i].value + "' with " + std::to_string(n) +
                      " cells",
                  line_no);
    for (std::size_t j = 1; j <= n; ++j) {
      double v = 0.0;
      if (ParseReal(row[j], &v) != RealParse::kOk || v < 0.0 || v > 1.0)
        throw Error(ErrorCode::kMalformedLine,
                    "line " + std::to_string(line_no) + ": cell '" +
                        std::string(row[j]) + "' is not a number in [0, 1]",
                    line_no);
      cells.push_back(v);
    }
  }
  return SimilarityMatrix(*kind, std::move(speakers), std::move(cells));
}

}  // namespace vsm
