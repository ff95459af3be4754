// src/synth.cc

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

#include "vsm/synth.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vsm/error.h"
#include "vsm/rng.h"

namespace vsm {

namespace {

std::string Padded(int value, int width) {
  std::string s = std::to_string(value);
  return std::string(width > static_cast<int>(s.size()) ? width - s.size() : 0,
                     '0') + s;
}

int Width(int count) {
  return std::max<int>(2, static_cast<int>(std::to_string(count).size()));
}

}  // namespace

std::string_view ScenarioName(Scenario s) {
  switch (s) {
    case Scenario::kNop: return "nop";
    case Scenario::kCollapse: return "collapse";
    case Scenario::kIdeal: return "ideal";
    case Scenario::kShift: return "shift";
  }
  return "?";
}

std::optional<Scenario> ParseScenario(std::string_view name) {
  for (Scenario s : {Scenario::kNop, Scenario::kCollapse, Scenario::kIdeal,
                     Scenario::kShift})
    if (ScenarioName(s) == name) return s;
  return std::nullopt;
}

void ValidateConfig(const SynthConfig &c) {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (c.n_speakers < 2) fail("n_speakers must be >= 2");
  if (c.segments_per_speaker < 2) fail("segments_per_speaker must be >= 2");
  if (c.embedding_dim < 1) fail("embedding_dim must be >= 1");
  if (!(c.between_speaker_std > 0.0) || !std::isfinite(c.between_speaker_std))
    fail("between_speaker_std must be positive");
  if (!(c.within_speaker_std > 0.0) || !std::isfinite(c.within_speaker_std))
    fail("within_speaker_std must be positive");
  if ((c.scenario == Scenario::kCollapse || c.scenario == Scenario::kIdeal) &&
      c.embedding_dim < 2)
    fail("the " + std::string(ScenarioName(c.scenario)) +
         " scenario needs embedding_dim >= 2");
}

SynthCohort Generate(const SynthConfig &config) {
  ValidateConfig(config);
  const int n = config.n_speakers;
  const int segs = config.segments_per_speaker;
  const int dim = config.embedding_dim;
  const int voice_dim = (dim + 1) / 2;
  const double bs = config.between_speaker_std;
  const double ws = config.within_speaker_std;
  Rng rng(config.seed);

  std::vector<std::vector<double>> means(n, std::vector<double>(dim, 0.0));
  for (auto &mean : means)
    for (int k = 0; k < voice_dim; ++k) mean[k] = bs * rng.Gaussian();

  std::vector<std::vector<double>> original;
  original.reserve(static_cast<std::size_t>(n) * segs);
  for (int s = 0; s < n; ++s)
    for (int u = 0; u < segs; ++u) {
      std::vector<double> v = means[s];
      for (int k = 0; k < voice_dim; ++k) v[k] += ws * rng.Gaussian();
      original.push_back(std::move(v));
    }

  std::vector<std::vector<double>> protected_rows;
  switch (config.scenario) {
    case Scenario::kNop:
      protected_rows = original;
      break;
    case Scenario::kCollapse: {
      std::vector<double> shared(dim, 0.0);
      for (int k = voice_dim; k < dim; ++k) shared[k] = bs * rng.Gaussian();
      for (std::size_t row = 0; row < original.size(); ++row) {
        std::vector<double> v = shared;
        for (int k = voice_dim; k < dim; ++k) v[k] += ws * rng.Gaussian();
        protected_rows.push_back(std::move(v));
      }
      break;
    }
    case Scenario::kIdeal: {
      std::vector<std::vector<double>> pseudo(n, std::vector<double>(dim, 0.0));
      for (auto &p : pseudo)
        for (int k = voice_dim; k < dim; ++k) p[k] = bs * rng.Gaussian();
      for (int s = 0; s < n; ++s)
        for (int u = 0; u < segs; ++u) {
          std::vector<double> v = pseudo[s];
          for (int k = voice_dim; k < dim; ++k) v[k] += ws * rng.Gaussian();
          protected_rows.push_back(std::move(v));
        }
      break;
    }
    case Scenario::kShift: {
      const double delta = 2.0 * bs * std::sqrt(static_cast<double>(voice_dim) / dim);
      protected_rows = original;
      for (auto &v : protected_rows)
        for (double &x : v) x += delta;
      break;
    }
  }

  std::vector<ManifestEntry> entries;
  EmbeddingTable table_o(dim), table_p(dim);
  std::vector<std::pair<SegmentId, SpeakerId>> p_entries;
  const int sw = Width(n), uw = Width(segs);
  for (int s = 0; s < n; ++s) {
    SpeakerId speaker{"spk" + Padded(s + 1, sw)};
    for (int u = 0; u < segs; ++u) {
      std::size_t row = static_cast<std::size_t>(s) * segs + u;
      std::string base = speaker.value + "-utt" + Padded(u + 1, uw);
      SegmentId o{base}, p{base + "-p"};
      entries.push_back({o, speaker, Domain::kOriginal});
      p_entries.emplace_back(p, speaker);
      table_o.Add(o, original[row]);
      table_p.Add(p, protected_rows[row]);
    }
  }
  for (auto &[segment, speaker] : p_entries)
    entries.push_back({segment, speaker, Domain::kProtected});

  return {CohortManifest::Build(std::move(entries)), std::move(table_o),
          std::move(table_p)};
}

TrialPlan ExhaustiveTrials(const SynthCohort &cohort) {
  const auto &o = cohort.embeddings_o.ids();
  const auto &p = cohort.embeddings_p.ids();
  TrialPlan plan;
  for (std::size_t a = 0; a < o.size(); ++a)
    for (std::size_t b = 0; b < o.size(); ++b) {
      if (a == b) continue;
      plan.oo.push_back({o[a], Domain::kOriginal, o[b], Domain::kOriginal});
      plan.op.push_back({o[a], Domain::kOriginal, p[b], Domain::kProtected});
      plan.pp.push_back({p[a], Domain::kProtected, p[b], Domain::kProtected});
    }
  return plan;
}

CohortScores ScoreCohort(const SynthCohort &cohort, double scale) {
  TrialPlan plan = ExhaustiveTrials(cohort);
  const auto &eo = cohort.embeddings_o;
  const auto &ep = cohort.embeddings_p;
  return {
      MakeScoreSet(MatrixKind::kOO, ScoreCosine(eo, plan.oo, scale),
                   cohort.manifest),
      MakeScoreSet(MatrixKind::kOP, ScoreCosine(eo, ep, plan.op, scale),
                   cohort.manifest),
      MakeScoreSet(MatrixKind::kPP, ScoreCosine(ep, plan.pp, scale),
                   cohort.manifest),
  };
}

Evaluation RunPipeline(const SynthCohort &cohort, double scale,
                       const EvaluateOptions &options) {
  CohortScores scores = ScoreCohort(cohort, scale);
  return EvaluateScoreSets(cohort.manifest, scores.oo, scores.op, scores.pp,
                           options);
}

}  // namespace vsm
