// tests/acceptance.cc

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

// Acceptance gate.  Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.  Tolerances and budgets are fixed
// below and are not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "test-util.h"
#include "vsm/calibration.h"
#include "vsm/heatmap.h"
#include "vsm/metrics.h"
#include "vsm/similarity.h"
#include "vsm/synth.h"
#include "vsm/text.h"

namespace vsm {
namespace {

using namespace vsm::testing;

constexpr double kPavTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-9;
constexpr double kIdealMinDeid = 95.0;
constexpr double kIdealMaxAbsGain = 1.0;
constexpr double kCollapseMaxGain = -10.0;
constexpr int kMinPropertyCases = 100;
constexpr double kScale = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string &why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string Fmt(const char *fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

constexpr Scenario kScenarios[] = {Scenario::kNop, Scenario::kCollapse,
                                   Scenario::kIdeal, Scenario::kShift};

SynthConfig Config(Scenario s, std::uint64_t seed) {
  SynthConfig c;
  c.scenario = s;
  c.seed = seed;
  return c;
}

// 1. D_diag endpoints.
Outcome DdiagEndpoints() {
  Outcome o;
  Rng rng(1);
  int cases = 0;
  for (int n = 2; n <= 40; ++n) {
    std::vector<double> id(n * n, 0.0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1.0;
    if (DDiag(SimilarityMatrix(MatrixKind::kOO, Speakers(n), id)) != 1.0)
      o.Fail("identity of size " + std::to_string(n) + " is not 1");
    for (int rep = 0; rep < 5; ++rep) {
      double v = rng.Uniform();
      std::vector<double> flat(n * n, v);
      if (DDiag(SimilarityMatrix(MatrixKind::kOO, Speakers(n), flat)) != 0.0)
        o.Fail("constant " + FormatShortest(v) + " of size " +
               std::to_string(n) + " is not 0");
      ++cases;
    }
  }
  if (o.pass) o.detail = "39 identity and " + std::to_string(cases) +
                         " constant matrices, exact";
  return o;
}

// 2. DeID and G_VD endpoints.
Outcome MetricEndpoints() {
  Outcome o;
  Rng rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 2 + rng.NextU64() % 10;
    auto oo = RandomMatrix(rng, MatrixKind::kOO, n, true);
    if (DDiag(oo) == 0.0) continue;
    SimilarityMatrix same_op(MatrixKind::kOP, oo.speakers(), oo.cells());
    SimilarityMatrix flat_op(MatrixKind::kOP, oo.speakers(),
                             std::vector<double>(n * n, rng.Uniform()));
    SimilarityMatrix same_pp(MatrixKind::kPP, oo.speakers(), oo.cells());
    auto full = Report(oo, flat_op, same_pp);
    auto none = Report(oo, same_op, same_pp);
    if (*full.deid_percent != 100.0) o.Fail("D_diag(M_OP)=0 did not give 100%");
    if (*none.deid_percent != 0.0) o.Fail("M_OP=M_OO did not give 0%");
    if (*none.gvd_db != 0.0) o.Fail("M_PP=M_OO did not give 0 dB");
  }
  if (o.pass) o.detail = "200 random M_OO, exact 100%, 0% and 0 dB";
  return o;
}

// 3. PAV against the exhaustive least-squares isotonic fit.
Outcome PavOracle() {
  Outcome o;
  std::mt19937_64 gen(3);
  double worst = 0.0;
  int instances = 0;
  while (instances < 1000) {
    std::size_t n = 1 + gen() % 10;
    std::vector<double> scores(n);
    std::vector<Label> labels(n);
    bool grid = gen() % 2;
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = grid ? double(int(gen() % 5) - 2)
                       : std::ldexp(double(gen() >> 11), -53) * 8 - 4;
      labels[i] = gen() % 2 ? Label::kTarget : Label::kImpostor;
    }
    auto t = std::count(labels.begin(), labels.end(), Label::kTarget);
    if (t == 0 || t == static_cast<long>(n)) continue;
    ++instances;
    auto map = PavFit(scores, labels);
    auto fit = ExhaustiveIsotonic(scores, labels);
    double eps = map.epsilon();
    for (std::size_t i = 0; i < n; ++i) {
      const auto &b = map.blocks()[map.BlockFor(scores[i])];
      double expect = std::clamp(fit[i], eps, 1.0 - eps);
      worst = std::max({worst, std::abs(b.posterior - expect),
                        std::abs(b.mean - fit[i])});
    }
  }
  if (worst > kPavTolerance)
    o.Fail("max block posterior deviation " + Fmt("%.3g", worst));
  o.detail = "1000 instances, n <= 10, max deviation " + Fmt("%.3g", worst) +
             " (tol 1e-9)";
  return o;
}

// 4. Pipeline matrices against the brute-force oracle.
Outcome SimilarityOracle() {
  Outcome o;
  double worst = 0.0;
  int cohorts = 0;
  for (int n = 2; n <= 4; ++n)
    for (int segs = 2; segs <= 3; ++segs)
      for (Scenario s : kScenarios)
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
          SynthConfig c = Config(s, seed);
          c.n_speakers = n;
          c.segments_per_speaker = segs;
          auto cohort = Generate(c);
          auto got = RunPipeline(cohort, kScale).matrices;
          auto ref = BruteForceSimilarity(cohort, kScale);
          for (auto [a, b] : {std::pair{&got.oo, &ref.oo},
                              std::pair{&got.op, &ref.op},
                              std::pair{&got.pp, &ref.pp}})
            for (std::size_t k = 0; k < a->cells().size(); ++k)
              worst = std::max(worst, std::abs(a->cells()[k] - b->cells()[k]));
          ++cohorts;
        }
  if (worst > kOracleTolerance)
    o.Fail("max cell deviation " + Fmt("%.3g", worst));
  o.detail = std::to_string(cohorts) + " cohorts, max cell deviation " +
             Fmt("%.3g", worst) + " (tol 1e-9)";
  return o;
}

std::vector<MetricsReport> RegimeReports(Scenario s, Outcome &o,
                                         bool check_golden) {
  std::vector<MetricsReport> out;
  const std::filesystem::path golden = VSM_GOLDEN_DIR;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::string name =
        std::string(ScenarioName(s)) + "-seed" + std::to_string(seed);
    EvaluateOptions opts;
    opts.set_name = name;
    auto r = RunPipeline(Generate(Config(s, seed)), kScale, opts).report;
    if (check_golden) {
      std::string expect = ReadFile(golden / "regimes" / (name + ".json"));
      if (expect.empty()) o.Fail("missing golden report " + name);
      else if (ReportToJson(r) != expect)
        o.Fail("report differs from golden run " + name);
    }
    out.push_back(r);
  }
  return out;
}

// 5. Scenario regimes at the default configuration.
Outcome ScenarioRegimes() {
  Outcome o;
  double ideal_min = 1e9, ideal_gain = 0, collapse_max = -1e9;
  for (Scenario s : kScenarios) {
    for (const MetricsReport &r : RegimeReports(s, o, true)) {
      if (!r.deid_percent || !r.gvd_db) {
        o.Fail(r.set_name + ": metrics undefined");
        continue;
      }
      double deid = *r.deid_percent, gain = *r.gvd_db;
      switch (s) {
        case Scenario::kNop:
          if (deid != 0.0 || gain != 0.0)
            o.Fail(r.set_name + ": DeID " + FormatShortest(deid) + ", G_VD " +
                   FormatShortest(gain));
          break;
        case Scenario::kIdeal:
          ideal_min = std::min(ideal_min, deid);
          ideal_gain = std::max(ideal_gain, std::abs(gain));
          if (deid < kIdealMinDeid || std::abs(gain) > kIdealMaxAbsGain)
            o.Fail(r.set_name + ": DeID " + Fmt("%.2f", deid) + ", G_VD " +
                   Fmt("%.2f", gain));
          break;
        case Scenario::kCollapse:
          collapse_max = std::max(collapse_max, gain);
          if (!(gain <= kCollapseMaxGain))
            o.Fail(r.set_name + ": G_VD " + Fmt("%.2f", gain));
          break;
        case Scenario::kShift:
          break;
      }
    }
  }
  o.detail = (o.pass ? std::string() : o.detail + "; ") +
             "10 seeds: nop exact 0%/0 dB, ideal DeID >= " +
             Fmt("%.2f", ideal_min) + "% |G_VD| <= " + Fmt("%.3f", ideal_gain) +
             " dB, collapse G_VD <= " + Fmt("%.2f", collapse_max) +
             " dB, all equal to golden runs";
  return o;
}

// 6. Collapse vs Shift ordering.
Outcome Ordering() {
  Outcome o;
  auto collapse = RegimeReports(Scenario::kCollapse, o, false);
  auto shift = RegimeReports(Scenario::kShift, o, false);
  double min_deid_gap = 1e9, min_gain_gap = 1e9;
  for (std::size_t k = 0; k < collapse.size(); ++k) {
    double dg = *collapse[k].deid_percent - *shift[k].deid_percent;
    double gg = *shift[k].gvd_db - *collapse[k].gvd_db;
    min_deid_gap = std::min(min_deid_gap, dg);
    min_gain_gap = std::min(min_gain_gap, gg);
    if (!(dg > 0.0) || !(gg > 0.0))
      o.Fail("seed " + std::to_string(k + 1) + " breaks the ordering");
  }
  o.detail = (o.pass ? std::string() : o.detail + "; ") +
             "10 seeds, min DeID(collapse)-DeID(shift) " +
             Fmt("%.2f", min_deid_gap) + " pp, min G_VD(shift)-G_VD(collapse) " +
             Fmt("%.2f", min_gain_gap) + " dB";
  return o;
}

// 7. Colormap and golden composite.
Outcome Colormap() {
  Outcome o;
  if (!(ColorOf(0.0) == Rgb{255, 247, 0})) o.Fail("color_of(0)");
  if (!(ColorOf(1.0) == Rgb{209, 20, 20})) o.Fail("color_of(1)");
  if (!(ColorOf(0.5) == Rgb{232, 134, 10})) o.Fail("color_of(0.5)");
  SynthConfig c = Config(Scenario::kShift, 7);
  c.n_speakers = 4;
  c.segments_per_speaker = 3;
  auto m = RunPipeline(Generate(c), kScale).matrices;
  std::string ppm =
      RenderComposite(ParseMatrix(ExportMatrix(m.oo)),
                      ParseMatrix(ExportMatrix(m.op)),
                      ParseMatrix(ExportMatrix(m.pp)), {8, 0}, ImageFormat::kPpm);
  std::string golden = ReadFile(std::filesystem::path(VSM_GOLDEN_DIR) /
                                "composite-shift-seed7.ppm");
  if (ppm != golden) o.Fail("composite differs from golden image");
  if (o.pass)
    o.detail = "endpoints and midpoint exact, " + std::to_string(ppm.size()) +
               "-byte composite identical to golden";
  return o;
}

// 8. Property suite.
Outcome Invariants() {
  Outcome o;
  std::mt19937_64 gen(8);
  auto random_cohort = [&](std::uint64_t seed) {
    SynthConfig c = Config(kScenarios[gen() % 4], seed);
    c.n_speakers = 2 + gen() % 5;
    c.segments_per_speaker = 2 + gen() % 3;
    c.embedding_dim = 2 + gen() % 10;
    return std::pair{c, Generate(c)};
  };
  int symmetry = 0, range = 0, sigmoid = 0, pav = 0, perm = 0, determinism = 0;

  for (int rep = 0; rep < 150; ++rep) {
    auto [cfg, cohort] = random_cohort(1000 + rep);
    auto m = RunPipeline(cohort, kScale).matrices;
    bool sym = true, in_range = true;
    for (std::size_t i = 0; i < m.oo.n(); ++i)
      for (std::size_t j = 0; j < m.oo.n(); ++j)
        sym &= m.oo.at(i, j) == m.oo.at(j, i) && m.pp.at(i, j) == m.pp.at(j, i);
    Image img = RasterizeComposite(m.oo, m.op, m.pp, {2, 0});
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x < y; ++x) sym &= img.at(x, y) == img.at(y, x);
    for (const auto *x : {&m.oo, &m.op, &m.pp})
      for (double v : x->cells()) in_range &= v > 0.0 && v < 1.0;
    if (!sym) o.Fail("asymmetric matrix for seed " + std::to_string(cfg.seed));
    if (!in_range) o.Fail("cell outside (0,1) for seed " + std::to_string(cfg.seed));
    ++symmetry;
    ++range;
  }

  Rng rng(88);
  for (int rep = 0; rep < 1000; ++rep) {
    double y = 60.0 * (rng.Uniform() - 0.5);
    if (std::abs(Sigmoid(-y) - (1.0 - Sigmoid(y))) > 1e-15)
      o.Fail("sigmoid asymmetric at " + FormatShortest(y));
    ++sigmoid;
  }

  for (int rep = 0; rep < 300; ++rep) {
    std::size_t n = 2 + gen() % 200;
    std::vector<double> s(n);
    std::vector<Label> l(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = double(int(gen() % 41) - 20) * 0.25;
      l[i] = gen() % 2 ? Label::kTarget : Label::kImpostor;
    }
    l[0] = Label::kTarget;
    l[1] = Label::kImpostor;
    auto map = PavFit(s, l);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s[a] < s[b]; });
    for (std::size_t k = 1; k < n; ++k)
      if (map.Apply(s[order[k - 1]]).llr > map.Apply(s[order[k]]).llr)
        o.Fail("PAV output not monotone");
    ++pav;
  }

  for (int rep = 0; rep < 120; ++rep) {
    auto [cfg, cohort] = random_cohort(5000 + rep);
    std::vector<std::size_t> p(cfg.n_speakers);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), gen);
    auto a = RunPipeline(cohort, kScale).matrices;
    auto b = RunPipeline(PermuteSpeakers(cohort, p), kScale).matrices;
    if (!IsPermutedOf(b.oo, a.oo, p) || !IsPermutedOf(b.op, a.op, p) ||
        !IsPermutedOf(b.pp, a.pp, p))
      o.Fail("permutation not equivariant for seed " + std::to_string(cfg.seed));
    ++perm;
  }

  for (int rep = 0; rep < 120; ++rep) {
    auto [cfg, cohort] = random_cohort(9000 + rep);
    auto run = [&, cfg = cfg] {
      auto ev = RunPipeline(Generate(cfg), kScale);
      return ReportToJson(ev.report) + ExportMatrix(ev.matrices.oo) +
             ExportMatrix(ev.matrices.op) + ExportMatrix(ev.matrices.pp) +
             RenderComposite(ev.matrices.oo, ev.matrices.op, ev.matrices.pp, {},
                             ImageFormat::kPpm);
    };
    if (run() != run()) o.Fail("non-deterministic output for seed " +
                               std::to_string(cfg.seed));
    ++determinism;
  }

  for (int count : {symmetry, range, sigmoid, pav, perm, determinism})
    if (count < kMinPropertyCases) o.Fail("too few generated cases");
  if (o.pass)
    o.detail = "cases: symmetry " + std::to_string(symmetry) + ", range " +
               std::to_string(range) + ", sigmoid " + std::to_string(sigmoid) +
               ", PAV monotone " + std::to_string(pav) + ", permutation " +
               std::to_string(perm) + ", determinism " +
               std::to_string(determinism);
  return o;
}

struct Criterion {
  int id;
  const char *name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace vsm

int main() {
  using namespace vsm;
  const Criterion criteria[] = {
      {1, "D_diag endpoints", 1.0, DdiagEndpoints},
      {2, "DeID and G_VD endpoints", 1.0, MetricEndpoints},
      {3, "PAV oracle equivalence", 10.0, PavOracle},
      {4, "similarity oracle equivalence", 30.0, SimilarityOracle},
      {5, "scenario regimes", 60.0, ScenarioRegimes},
      {6, "collapse vs shift ordering", 60.0, Ordering},
      {7, "colormap and golden composite", 10.0, Colormap},
      {8, "invariant suite", 60.0, Invariants},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s)
      o.Fail("took " + Fmt("%.2f", secs) + " s, budget " +
             Fmt("%.0f", c.budget_s) + " s");
    failed += !o.pass;
    std::printf("%s  criterion %d  %-30s  %s  [%.2f s]\n",
                o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
