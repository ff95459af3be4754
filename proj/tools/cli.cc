// tools/cli.cc

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

#include "cli.h"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vsm/calibration.h"
#include "vsm/cohort.h"
#include "vsm/error.h"
#include "vsm/heatmap.h"
#include "vsm/metrics.h"
#include "vsm/pipeline.h"
#include "vsm/scores.h"
#include "vsm/similarity.h"
#include "vsm/synth.h"
#include "vsm/text.h"

namespace vsm::cli {

namespace fs = std::filesystem;

namespace {

// A library error together with the file it came from.
struct FileError {
  Error error;
  std::string path;
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{Error(ErrorCode::kIo, "cannot open file"), path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

template <typename Fn>
auto Parsing(const std::string &path, Fn fn) {
  try {
    return fn(ReadFile(path));
  } catch (const Error &e) {
    throw FileError{e, path};
  }
}

// Writes under a temporary name and renames into place.
void WriteFileAtomic(const fs::path &path, const std::string &contents) {
  fs::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw FileError{Error(ErrorCode::kIo, "cannot write file"), path.string()};
    }
  }
  fs::rename(tmp, path);
}

void WriteAll(const fs::path &dir,
              const std::vector<std::pair<std::string, std::string>> &files) {
  fs::create_directories(dir);
  for (const auto &[name, contents] : files) WriteFileAtomic(dir / name, contents);
}

std::string DefaultOutDir() {
  const char *env = std::getenv("VSM_OUT_DIR");
  return env && *env ? std::string(env) : std::string("vsm-out");
}

CohortManifest LoadManifest(const std::string &utt2spk_o,
                            const std::string &utt2spk_p) {
  std::vector<ManifestEntry> entries;
  if (!utt2spk_o.empty()) {
    auto o = Parsing(utt2spk_o, [](const std::string &text) {
      return ParseUtt2Spk(text, Domain::kOriginal);
    });
    entries.insert(entries.end(), o.begin(), o.end());
  }
  if (!utt2spk_p.empty()) {
    auto p = Parsing(utt2spk_p, [](const std::string &text) {
      return ParseUtt2Spk(text, Domain::kProtected);
    });
    entries.insert(entries.end(), p.begin(), p.end());
  }
  std::string where = utt2spk_o.empty() ? utt2spk_p : utt2spk_o;
  try {
    return CohortManifest::Build(std::move(entries));
  } catch (const Error &e) {
    throw FileError{e, where};
  }
}

ScoreSet LoadScores(const std::string &path, const CohortManifest &manifest,
                    MatrixKind kind) {
  return Parsing(path, [&](const std::string &text) {
    return ParseScoreSet(text, manifest, kind);
  });
}

struct CalibrationFlags {
  std::optional<double> epsilon;
  bool keep_prior = false;

  void Register(CLI::App *app) {
    app->add_option("--epsilon", epsilon,
                    "Posterior clamp (default 1/(2(T+1)) per score set)")
        ->check(CLI::Range(0.0, 0.5));
    app->add_flag("--keep-prior", keep_prior,
                  "Do not subtract the empirical prior log-odds");
  }
  CalibrationOptions Options() const { return {epsilon, !keep_prior}; }
};

struct EvaluateArgs {
  std::string scores_oo, scores_op, scores_pp, utt2spk_o, utt2spk_p;
  std::string out_dir = DefaultOutDir();
  std::string set_name;
  bool pre_calibrated = false;
  bool exclude_op_same_id = false;
  bool quiet = false;
  int cell_size = 8;
  CalibrationFlags calibration;
};

int Evaluate(const EvaluateArgs &a, std::ostream &out) {
  CohortManifest manifest = LoadManifest(a.utt2spk_o, a.utt2spk_p);
  ScoreSet oo = LoadScores(a.scores_oo, manifest, MatrixKind::kOO);
  ScoreSet op = LoadScores(a.scores_op, manifest, MatrixKind::kOP);
  ScoreSet pp = LoadScores(a.scores_pp, manifest, MatrixKind::kPP);

  EvaluateOptions options;
  options.pre_calibrated = a.pre_calibrated;
  options.calibration = a.calibration.Options();
  options.similarity.exclude_op_same_id = a.exclude_op_same_id;
  options.set_name = a.set_name;
  Evaluation eval = EvaluateScoreSets(manifest, oo, op, pp, options);

  std::string t_oo = ExportMatrix(eval.matrices.oo);
  std::string t_op = ExportMatrix(eval.matrices.op);
  std::string t_pp = ExportMatrix(eval.matrices.pp);
  // Images come from the exported tables so that `render` on those tables
  // reproduces them byte for byte.
  SimilarityMatrix r_oo = ParseMatrix(t_oo), r_op = ParseMatrix(t_op),
                   r_pp = ParseMatrix(t_pp);
  CompositeLayout layout{a.cell_size, 0};
  WriteAll(a.out_dir,
           {{"metrics.json", ReportToJson(eval.report)},
            {"oo.mat.txt", t_oo},
            {"op.mat.txt", t_op},
            {"pp.mat.txt", t_pp},
            {"composite.ppm", RenderComposite(r_oo, r_op, r_pp, layout, ImageFormat::kPpm)},
            {"composite.svg", RenderComposite(r_oo, r_op, r_pp, layout, ImageFormat::kSvg)}});

  if (!a.quiet) {
    const MetricsReport &r = eval.report;
    out << (r.set_name.empty() ? std::string("set") : r.set_name) << ": N="
        << r.n_speakers << " DeID="
        << (r.deid_percent ? FormatFixed(*r.deid_percent, 2) + "%" : "undefined")
        << " G_VD="
        << (!r.gvd_db ? std::string("undefined")
            : std::isinf(*r.gvd_db) ? std::string("-inf dB")
                                    : FormatFixed(*r.gvd_db, 2) + " dB");
    for (MetricFlag f : r.flags) out << " [" << MetricFlagName(f) << "]";
    out << "\n";
  }
  return kOk;
}

struct CalibrateArgs {
  std::string scores, kind, utt2spk_o, utt2spk_p, out;
  CalibrationFlags calibration;
};

int Calibrate(const CalibrateArgs &a, std::ostream &err) {
  MatrixKind kind = *ParseKind(a.kind);
  CohortManifest manifest = LoadManifest(a.utt2spk_o, a.utt2spk_p);
  ScoreSet set = LoadScores(a.scores, manifest, kind);
  CalibratedSet calibrated = [&] {
    try {
      return CalibrateSet(set, a.calibration.Options());
    } catch (const Error &e) {
      throw FileError{e, a.scores};
    }
  }();
  std::string text;
  for (const CalibratedTrial &t : calibrated.trials) {
    text += t.left.value;
    text += ' ';
    text += t.right.value;
    text += ' ';
    text += FormatShortest(t.llr);
    text += '\n';
  }
  if (calibrated.outside_support > 0)
    err << "warning: " << calibrated.outside_support
        << " scores fell outside the calibration support\n";
  fs::path out_path(a.out);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  WriteFileAtomic(out_path, text);
  return kOk;
}

struct RenderArgs {
  std::string oo, op, pp, matrix, out, format = "ppm";
  int cell_size = 8;
  int label_margin = 0;
};

int Render(const RenderArgs &a) {
  auto load = [](const std::string &path) {
    return Parsing(path, [](const std::string &text) { return ParseMatrix(text); });
  };
  ImageFormat format = a.format == "svg" ? ImageFormat::kSvg : ImageFormat::kPpm;
  CompositeLayout layout{a.cell_size, a.label_margin};
  std::string image;
  if (!a.matrix.empty()) {
    image = RenderSingle(load(a.matrix), layout, format);
  } else {
    SimilarityMatrix oo = load(a.oo), op = load(a.op), pp = load(a.pp);
    if (oo.kind() != MatrixKind::kOO || op.kind() != MatrixKind::kOP ||
        pp.kind() != MatrixKind::kPP)
      throw Error(ErrorCode::kKindMismatch,
                  "--oo, --op and --pp must hold OO, OP and PP tables");
    image = RenderComposite(oo, op, pp, layout, format);
  }
  fs::path out_path(a.out);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  WriteFileAtomic(out_path, image);
  return kOk;
}

struct SimulateArgs {
  SynthConfig config;
  std::string scenario = "nop";
  double scale = 10.0;
  std::string out_dir = DefaultOutDir();
};

int Simulate(SimulateArgs a) {
  a.config.scenario = *ParseScenario(a.scenario);
  SynthCohort cohort = Generate(a.config);
  CohortScores scores = ScoreCohort(cohort, a.scale);
  WriteAll(a.out_dir,
           {{"manifest.txt", WriteManifest(cohort.manifest)},
            {"utt2spk_o", WriteUtt2Spk(cohort.manifest, Domain::kOriginal)},
            {"utt2spk_p", WriteUtt2Spk(cohort.manifest, Domain::kProtected)},
            {"embeddings_o.txt", WriteEmbeddings(cohort.embeddings_o)},
            {"embeddings_p.txt", WriteEmbeddings(cohort.embeddings_p)},
            {"scores_oo.txt", WriteScores(scores.oo.trials)},
            {"scores_op.txt", WriteScores(scores.op.trials)},
            {"scores_pp.txt", WriteScores(scores.pp.trials)}});
  return kOk;
}

void PrintError(std::ostream &err, const Error &e, const std::string &path) {
  nlohmann::ordered_json j;
  j["error"] = std::string(ErrorCodeName(e.code()));
  j["message"] = e.what();
  if (!path.empty()) j["file"] = path;
  if (e.line() > 0) j["line"] = e.line();
  err << j.dump() << "\n";
}

}  // namespace

int Run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Pseudonymisation assessment from speaker-verification scores"};
  app.require_subcommand(1);

  EvaluateArgs ev;
  CLI::App *evaluate = app.add_subcommand(
      "evaluate", "Calibrate the three score sets, build M_OO/M_OP/M_PP and "
                  "report DeID and G_VD");
  evaluate->add_option("--scores-oo", ev.scores_oo, "original vs original scores")
      ->required()->check(CLI::ExistingFile);
  evaluate->add_option("--scores-op", ev.scores_op, "original vs protected scores")
      ->required()->check(CLI::ExistingFile);
  evaluate->add_option("--scores-pp", ev.scores_pp, "protected vs protected scores")
      ->required()->check(CLI::ExistingFile);
  evaluate->add_option("--utt2spk-o", ev.utt2spk_o, "original segment -> speaker")
      ->required()->check(CLI::ExistingFile);
  evaluate->add_option("--utt2spk-p", ev.utt2spk_p, "protected segment -> speaker")
      ->required()->check(CLI::ExistingFile);
  evaluate->add_option("--out-dir", ev.out_dir, "output directory (default $VSM_OUT_DIR or vsm-out)");
  evaluate->add_option("--set-name", ev.set_name, "name recorded in metrics.json");
  evaluate->add_option("--cell-size", ev.cell_size, "pixels per matrix cell")
      ->check(CLI::PositiveNumber);
  evaluate->add_flag("--pre-calibrated", ev.pre_calibrated,
                     "scores are already calibrated llrs; skip PAV");
  evaluate->add_flag("--exclude-op-same-id", ev.exclude_op_same_id,
                     "drop OP pairs whose two segment ids are equal");
  evaluate->add_flag("-q,--quiet", ev.quiet, "no summary on stdout");
  ev.calibration.Register(evaluate);

  CalibrateArgs ca;
  CLI::App *calibrate = app.add_subcommand(
      "calibrate", "Oracle-calibrate one score file into llrs");
  calibrate->add_option("--scores", ca.scores)->required()->check(CLI::ExistingFile);
  calibrate->add_option("--kind", ca.kind, "oo, op or pp")
      ->required()
      ->check(CLI::IsMember({"oo", "op", "pp", "OO", "OP", "PP"}));
  calibrate->add_option("--utt2spk-o", ca.utt2spk_o)->check(CLI::ExistingFile);
  calibrate->add_option("--utt2spk-p", ca.utt2spk_p)->check(CLI::ExistingFile);
  calibrate->add_option("--out", ca.out, "llr file to write")->required();
  ca.calibration.Register(calibrate);

  RenderArgs ra;
  CLI::App *render = app.add_subcommand("render", "Render matrix tables as a heatmap");
  auto *r_oo = render->add_option("--oo", ra.oo)->check(CLI::ExistingFile);
  auto *r_op = render->add_option("--op", ra.op)->check(CLI::ExistingFile);
  auto *r_pp = render->add_option("--pp", ra.pp)->check(CLI::ExistingFile);
  auto *r_single = render->add_option("--matrix", ra.matrix, "render one table alone")
                       ->check(CLI::ExistingFile);
  r_oo->needs(r_op, r_pp)->excludes(r_single);
  r_op->needs(r_oo, r_pp);
  r_pp->needs(r_oo, r_op);
  render->add_option("--cell-size", ra.cell_size)->check(CLI::PositiveNumber);
  render->add_option("--label-margin", ra.label_margin,
                     "PPM only: pixels reserved for the O/P labels")
      ->check(CLI::NonNegativeNumber);
  render->add_option("--format", ra.format)->check(CLI::IsMember({"ppm", "svg"}));
  render->add_option("--out", ra.out)->required();

  SimulateArgs sa;
  CLI::App *simulate = app.add_subcommand(
      "simulate", "Write a synthetic cohort: manifests, embeddings and scores");
  simulate->add_option("--scenario", sa.scenario)
      ->check(CLI::IsMember({"nop", "collapse", "ideal", "shift"}));
  simulate->add_option("--seed", sa.config.seed);
  simulate->add_option("--speakers", sa.config.n_speakers);
  simulate->add_option("--segments", sa.config.segments_per_speaker);
  simulate->add_option("--dim", sa.config.embedding_dim);
  simulate->add_option("--between-std", sa.config.between_speaker_std);
  simulate->add_option("--within-std", sa.config.within_speaker_std);
  simulate->add_option("--scale", sa.scale, "cosine score scale")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--out-dir", sa.out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*evaluate) return Evaluate(ev, out);
    if (*calibrate) {
      if (ca.utt2spk_o.empty() && ca.utt2spk_p.empty()) {
        err << "calibrate: at least one of --utt2spk-o / --utt2spk-p is required\n";
        return kUsage;
      }
      return Calibrate(ca, err);
    }
    if (*render) {
      if (ra.matrix.empty() && ra.oo.empty()) {
        err << "render: give --oo/--op/--pp or --matrix\n";
        return kUsage;
      }
      return Render(ra);
    }
    if (*simulate) return Simulate(sa);
  } catch (const FileError &e) {
    PrintError(err, e.error, e.path);
    return kData;
  } catch (const Error &e) {
    PrintError(err, e, "");
    return kData;
  } catch (const std::exception &e) {
    nlohmann::ordered_json j;
    j["error"] = "Internal";
    j["message"] = e.what();
    err << j.dump() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace vsm::cli
