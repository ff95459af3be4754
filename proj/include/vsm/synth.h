// include/vsm/synth.h

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

#ifndef VSM_SYNTH_H_
#define VSM_SYNTH_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vsm/cohort.h"
#include "vsm/pipeline.h"
#include "vsm/scores.h"
#include "vsm/similarity.h"

namespace vsm {

enum class Scenario {
  kNop,       // protected = original
  kCollapse,  // every speaker mapped to one shared pseudovoice
  kIdeal,     // every speaker mapped to its own, unrelated pseudovoice
  kShift,     // original plus one shared fixed offset
};

std::string_view ScenarioName(Scenario s);  // "nop", "collapse", ...
std::optional<Scenario> ParseScenario(std::string_view name);

struct SynthConfig {
  int n_speakers = 10;
  int segments_per_speaker = 5;
  int embedding_dim = 16;
  double between_speaker_std = 1.0;
  double within_speaker_std = 0.1;
  Scenario scenario = Scenario::kNop;
  std::uint64_t seed = 0;
};

// Throws InvalidConfig.
void ValidateConfig(const SynthConfig &config);

/// Generated cohort.  Row k of embeddings_p is the protected version of row
/// k of embeddings_o; both tables list segments speaker by speaker in the
/// manifest's speaker order.
struct SynthCohort {
  CohortManifest manifest;
  EmbeddingTable embeddings_o;
  EmbeddingTable embeddings_p;
};

/**
   Gaussian speaker model in `embedding_dim` coordinates, split into a
   leading voice block of ceil(d/2) coordinates, where original speakers
   live, and a trailing pseudovoice block of floor(d/2) coordinates.

   Original segment = speaker mean + noise, both confined to the voice
   block (means ~ N(0, between_std^2), noise ~ N(0, within_std^2)).
   Protected segments:
     nop       an exact copy of the original;
     collapse  one shared pseudo-mean + fresh noise, in the pseudovoice block;
     ideal     a fresh pseudo-mean per speaker + fresh noise, in the
               pseudovoice block;
     shift     the original plus delta, delta_k = 2 between_std sqrt(ceil(d/2) / d)
               in every coordinate.

   Draw order from Rng(seed): speaker means (speaker-major), original noise
   (segment-major), then scenario draws: collapse draws the shared mean then
   per-segment noise; ideal draws all pseudo-means then per-segment noise.
*/
SynthCohort Generate(const SynthConfig &config);

struct TrialPlan {
  std::vector<TrialKey> oo, op, pp;
};

// Exhaustive trial lists: every ordered pair of distinct segments within O
// and within P, and every (original k, protected l) with k != l, so that
// the three lists have the same shape.
TrialPlan ExhaustiveTrials(const SynthCohort &cohort);

struct CohortScores {
  ScoreSet oo, op, pp;
};

// Cosine-scores the exhaustive plan.
CohortScores ScoreCohort(const SynthCohort &cohort, double scale);

// score -> calibrate -> matrices -> metrics over the exhaustive plan.
Evaluation RunPipeline(const SynthCohort &cohort, double scale,
                       const EvaluateOptions &options = {});

/**
   Independent reference for the whole chain on small cohorts (at most 4
   speakers with at most 3 segments each; TooLargeForOracle otherwise).
   Uses nested loops over speakers and segments, its own cosine and an
   isotonic fit from the max-min interval formula, so it shares no code with
   the calibration or similarity modules.
*/
MatrixTriple BruteForceSimilarity(const SynthCohort &cohort, double scale);

// Least-squares isotonic fit of labels (target = 1) against scores, tied
// scores forced equal, by enumerating every partition of the sorted
// distinct scores into contiguous blocks.  Returns the fitted value per
// input trial.  TooLargeForOracle beyond 20 distinct scores.
std::vector<double> ExhaustiveIsotonic(std::span<const double> scores,
                                       std::span<const Label> labels);

// Same fit from fitted(i) = max_{a <= i} min_{b >= i} mean(a..b) over the
// sorted distinct scores.  Cubic in the number of distinct scores.
std::vector<double> MinMaxIsotonic(std::span<const double> scores,
                                   std::span<const Label> labels);

}  // namespace vsm

#endif  // VSM_SYNTH_H_
