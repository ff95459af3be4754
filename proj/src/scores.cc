// src/scores.cc

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

#include "vsm/scores.h"

#include <cmath>
#include <unordered_set>

#include "vsm/error.h"
#include "vsm/text.h"

namespace vsm {

namespace {

std::string LinePrefix(std::size_t line_no) {
  return line_no ? "line " + std::to_string(line_no) + ": " : std::string();
}

// Builds one ScoreSet while checking the per-trial invariants.
class SetBuilder {
 public:
  SetBuilder(MatrixKind kind, const CohortManifest &manifest)
      : manifest_(manifest) {
    set_.kind = kind;
  }

  void Add(Trial trial, std::size_t line_no) {
    if (!std::isfinite(trial.raw_score))
      throw Error(ErrorCode::kNonFiniteScore,
                  LinePrefix(line_no) + "score is not finite", line_no);
    if (KindOf(trial.left_domain, trial.right_domain) != set_.kind)
      throw Error(ErrorCode::kKindMismatch,
                  LinePrefix(line_no) + "trial '" + trial.left.value + "' vs '" +
                      trial.right.value + "' is not an " +
                      std::string(KindName(set_.kind)) + " trial",
                  line_no);
    auto left = Resolve(trial.left, trial.left_domain, line_no);
    auto right = Resolve(trial.right, trial.right_domain, line_no);
    std::string key = trial.left.value;
    key += '\x1f';
    key += DomainName(trial.left_domain);
    key += trial.right.value;
    key += '\x1f';
    key += DomainName(trial.right_domain);
    if (!seen_.insert(std::move(key)).second)
      throw Error(ErrorCode::kDuplicateTrial,
                  LinePrefix(line_no) + "trial '" + trial.left.value + "' vs '" +
                      trial.right.value + "' is repeated",
                  line_no);
    set_.labels.push_back(manifest_.SpeakerOfEntry(left) ==
                                  manifest_.SpeakerOfEntry(right)
                              ? Label::kTarget
                              : Label::kImpostor);
    set_.trials.push_back(std::move(trial));
  }

  ScoreSet Take() { return std::move(set_); }

 private:
  std::size_t Resolve(const SegmentId &segment, Domain domain,
                      std::size_t line_no) const {
    auto index = manifest_.EntryIndex(segment.value, domain);
    if (!index)
      throw Error(ErrorCode::kUnknownSegment,
                  LinePrefix(line_no) + "segment '" + segment.value +
                      "' is not in the " + std::string(DomainName(domain)) +
                      " manifest",
                  line_no);
    return *index;
  }

  const CohortManifest &manifest_;
  ScoreSet set_;
  std::unordered_set<std::string> seen_;
};

struct ScoreLine {
  std::string_view left, right;
  double score;
};

ScoreLine ParseScoreLine(std::string_view line, std::size_t line_no) {
  auto fields = SplitFields(line);
  if (fields.size() != 3)
    throw Error(ErrorCode::kMalformedLine,
                LinePrefix(line_no) + "expected 3 fields, found " +
                    std::to_string(fields.size()),
                line_no);
  double score = 0.0;
  switch (ParseReal(fields[2], &score)) {
    case RealParse::kOk:
      break;
    case RealParse::kNonFinite:
      throw Error(ErrorCode::kNonFiniteScore,
                  LinePrefix(line_no) + "score '" + std::string(fields[2]) +
                      "' is not finite",
                  line_no);
    case RealParse::kMalformed:
      throw Error(ErrorCode::kMalformedLine,
                  LinePrefix(line_no) + "score '" + std::string(fields[2]) +
                      "' is not a decimal number",
                  line_no);
  }
  return {fields[0], fields[1], score};
}

Domain InferDomain(const CohortManifest &manifest, std::string_view segment,
                   std::size_t line_no) {
  bool in_o = manifest.EntryIndex(segment, Domain::kOriginal).has_value();
  bool in_p = manifest.EntryIndex(segment, Domain::kProtected).has_value();
  if (in_o && in_p)
    throw Error(ErrorCode::kAmbiguousSegment,
                LinePrefix(line_no) + "segment '" + std::string(segment) +
                    "' exists in both domains",
                line_no);
  if (!in_o && !in_p)
    throw Error(ErrorCode::kUnknownSegment,
                LinePrefix(line_no) + "segment '" + std::string(segment) +
                    "' is not in the manifest",
                line_no);
  return in_o ? Domain::kOriginal : Domain::kProtected;
}

}  // namespace

std::string_view KindName(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::kOO: return "OO";
    case MatrixKind::kOP: return "OP";
    case MatrixKind::kPP: return "PP";
  }
  return "??";
}

std::optional<MatrixKind> ParseKind(std::string_view name) {
  std::string upper(name);
  for (char &c : upper)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  if (upper == "OO") return MatrixKind::kOO;
  if (upper == "OP") return MatrixKind::kOP;
  if (upper == "PP") return MatrixKind::kPP;
  return std::nullopt;
}

MatrixKind KindOf(Domain left, Domain right) {
  if (left != right) return MatrixKind::kOP;
  return left == Domain::kOriginal ? MatrixKind::kOO : MatrixKind::kPP;
}

std::size_t ScoreSet::num_targets() const {
  std::size_t n = 0;
  for (Label l : labels) n += l == Label::kTarget;
  return n;
}

ScoreSet MakeScoreSet(MatrixKind kind, std::vector<Trial> trials,
                      const CohortManifest &manifest) {
  SetBuilder builder(kind, manifest);
  for (Trial &t : trials) builder.Add(std::move(t), 0);
  return builder.Take();
}

std::array<ScoreSet, 3> ParseScores(std::string_view text,
                                    const CohortManifest &manifest) {
  SetBuilder oo(MatrixKind::kOO, manifest), op(MatrixKind::kOP, manifest),
      pp(MatrixKind::kPP, manifest);
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    ScoreLine parsed = ParseScoreLine(line, line_no);
    Trial trial{SegmentId{std::string(parsed.left)},
                SegmentId{std::string(parsed.right)}, parsed.score,
                InferDomain(manifest, parsed.left, line_no),
                InferDomain(manifest, parsed.right, line_no)};
    switch (KindOf(trial.left_domain, trial.right_domain)) {
      case MatrixKind::kOO: oo.Add(std::move(trial), line_no); break;
      case MatrixKind::kOP: op.Add(std::move(trial), line_no); break;
      case MatrixKind::kPP: pp.Add(std::move(trial), line_no); break;
    }
  });
  return {oo.Take(), op.Take(), pp.Take()};
}

ScoreSet ParseScoreSet(std::string_view text, const CohortManifest &manifest,
                       MatrixKind kind) {
  SetBuilder builder(kind, manifest);
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    ScoreLine parsed = ParseScoreLine(line, line_no);
    Domain left = Domain::kOriginal, right = Domain::kOriginal;
    switch (kind) {
      case MatrixKind::kOO: break;
      case MatrixKind::kPP:
        left = right = Domain::kProtected;
        break;
      case MatrixKind::kOP: {
        right = Domain::kProtected;
        bool forward =
            manifest.EntryIndex(parsed.left, Domain::kOriginal) &&
            manifest.EntryIndex(parsed.right, Domain::kProtected);
        bool backward =
            manifest.EntryIndex(parsed.left, Domain::kProtected) &&
            manifest.EntryIndex(parsed.right, Domain::kOriginal);
        if (!forward && backward) std::swap(left, right);
        break;
      }
    }
    builder.Add(Trial{SegmentId{std::string(parsed.left)},
                      SegmentId{std::string(parsed.right)}, parsed.score, left,
                      right},
                line_no);
  });
  return builder.Take();
}

std::string WriteScores(std::span<const Trial> trials) {
  std::string out;
  for (const Trial &t : trials) {
    out += t.left.value;
    out += ' ';
    out += t.right.value;
    out += ' ';
    out += FormatShortest(t.raw_score);
    out += '\n';
  }
  return out;
}

void EmbeddingTable::Add(const SegmentId &segment, std::vector<double> values) {
  if (values.empty())
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding for '" + segment.value + "' is empty");
  if (dim_ == 0) dim_ = values.size();
  if (values.size() != dim_)
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding for '" + segment.value + "' has dimension " +
                    std::to_string(values.size()) + ", expected " +
                    std::to_string(dim_));
  for (double v : values) {
    if (!std::isfinite(v))
      throw Error(ErrorCode::kNonFiniteScore,
                  "embedding for '" + segment.value + "' is not finite");
  }
  if (!index_.emplace(segment.value, ids_.size()).second)
    throw Error(ErrorCode::kDuplicateSegment,
                "embedding for '" + segment.value + "' given twice");
  ids_.push_back(segment);
  rows_.push_back(std::move(values));
}

const std::vector<double> *EmbeddingTable::Find(std::string_view segment) const {
  auto it = index_.find(std::string(segment));
  return it == index_.end() ? nullptr : &rows_[it->second];
}

bool EmbeddingTable::operator==(const EmbeddingTable &other) const {
  return dim_ == other.dim_ && ids_ == other.ids_ && rows_ == other.rows_;
}

EmbeddingTable ParseEmbeddings(std::string_view text) {
  EmbeddingTable table;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = SplitFields(line);
    if (fields.size() < 2)
      throw Error(ErrorCode::kMalformedLine,
                  LinePrefix(line_no) + "expected '<segment> v1 ... vd'",
                  line_no);
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      if (ParseReal(fields[i], &v) != RealParse::kOk)
        throw Error(ErrorCode::kMalformedLine,
                    LinePrefix(line_no) + "value '" + std::string(fields[i]) +
                        "' is not a finite decimal number",
                    line_no);
      values.push_back(v);
    }
    try {
      table.Add(SegmentId{std::string(fields[0])}, std::move(values));
    } catch (const Error &e) {
      throw Error(e.code(), LinePrefix(line_no) + e.what(), line_no);
    }
  });
  return table;
}

std::string WriteEmbeddings(const EmbeddingTable &table) {
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += table.ids()[i].value;
    for (double v : table.row(i)) {
      out += ' ';
      out += FormatShortest(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<Trial> ScoreCosine(const EmbeddingTable &left_table,
                               const EmbeddingTable &right_table,
                               std::span<const TrialKey> pairs, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(ErrorCode::kInvalidConfig, "cosine scale must be positive");
  if (!left_table.empty() && !right_table.empty() &&
      left_table.dim() != right_table.dim())
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding tables have different dimensions");

  auto lookup = [](const EmbeddingTable &table,
                   const SegmentId &id) -> const std::vector<double> & {
    const std::vector<double> *row = table.Find(id.value);
    if (!row)
      throw Error(ErrorCode::kUnknownSegment,
                  "no embedding for segment '" + id.value + "'");
    return *row;
  };
  auto norm = [](const std::vector<double> &v, const SegmentId &id) {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    if (sq == 0.0)
      throw Error(ErrorCode::kZeroNormVector,
                  "embedding for '" + id.value + "' has zero norm");
    return std::sqrt(sq);
  };

  std::vector<Trial> trials;
  trials.reserve(pairs.size());
  for (const TrialKey &key : pairs) {
    const auto &a = lookup(left_table, key.left);
    const auto &b = lookup(right_table, key.right);
    double dot = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
    double cosine = dot / (norm(a, key.left) * norm(b, key.right));
    trials.push_back(Trial{key.left, key.right, scale * cosine, key.left_domain,
                           key.right_domain});
  }
  return trials;
}

std::vector<Trial> ScoreCosine(const EmbeddingTable &table,
                               std::span<const TrialKey> pairs, double scale) {
  return ScoreCosine(table, table, pairs, scale);
}

}  // namespace vsm
