// Copyright 2026 The biomeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biomeval/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "biomeval/fusion.hpp"
#include "biomeval/io.hpp"
#include "biomeval/metrics.hpp"
#include "biomeval/plot.hpp"
#include "biomeval/protocols.hpp"
#include "biomeval/report.hpp"
#include "biomeval/similarity.hpp"
#include "biomeval/synth.hpp"
#include "biomeval/types.hpp"
#include "biomeval/version.hpp"

namespace biomeval {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::vector<Template> read_templates_any(const std::string& path) {
  if (path.ends_with(".csv")) return read_templates_csv(path);
  return read_templates(path);
}

TemplateStore load_store(const std::vector<std::string>& paths) {
  TemplateStore store;
  for (const std::string& p : paths) {
    for (auto& t : read_templates_any(p)) store.add(std::move(t));
  }
  return store;
}

std::size_t resolve_workers(std::size_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BIOMEVAL_WORKERS")) {
    const std::string s(env);
    if (s.empty() ||
        s.find_first_not_of("0123456789") != std::string::npos ||
        s == "0") {
      raise(ErrorCode::kInvalidArgument,
            "BIOMEVAL_WORKERS must be a positive integer, got '" + s + "'");
    }
    return static_cast<std::size_t>(std::stoull(s));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    out += ok ? c : '_';
  }
  return out;
}

std::string file_stem(const std::string& path) {
  return fs::path(path).stem().string();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorCode::kIoFailure, "cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    raise(ErrorCode::kIoFailure, "write failure on '" + path + "'");
  }
}

// ---------------------------------------------------------------- fuse ----

struct FuseArgs {
  std::string features;
  std::string map;
  std::string method = "auto";
  std::string out;
};

int cmd_fuse(const FuseArgs& a, std::ostream& out) {
  TemplateStore store{read_templates_any(a.features)};
  const auto records = read_media_map_manifest(a.map);
  if (records.empty()) {
    raise(ErrorCode::kEmptyInput, "'" + a.map + "' lists no media templates");
  }
  const bool has_weights = records.front().weight.has_value();

  struct Group {
    SubjectId subject;
    std::vector<TemplateId> media;
    std::vector<double> weights;
  };
  std::vector<std::string> order;
  std::map<std::string, Group> groups;
  for (const auto& r : records) {
    auto [it, inserted] = groups.try_emplace(r.fused_template_id);
    if (inserted) {
      order.push_back(r.fused_template_id);
      it->second.subject = r.subject_id;
    } else if (it->second.subject != r.subject_id) {
      raise(ErrorCode::kBadValue,
            "group '" + r.fused_template_id + "' mixes subjects '" +
                it->second.subject + "' and '" + r.subject_id + "'");
    }
    for (const auto& m : it->second.media) {
      if (m == r.media_template_id) {
        raise(ErrorCode::kBadValue,
              "group '" + r.fused_template_id + "' lists media template '" +
                  m + "' twice");
      }
    }
    it->second.media.push_back(r.media_template_id);
    if (has_weights) it->second.weights.push_back(*r.weight);
  }

  std::string method = a.method;
  if (method == "auto") method = has_weights ? "weighted" : "mean";
  if (method == "weighted" && !has_weights) {
    raise(ErrorCode::kBadWeights,
          "--method weighted needs a weight column in '" + a.map + "'");
  }

  std::vector<Template> fused;
  fused.reserve(order.size());
  for (const std::string& id : order) {
    const Group& g = groups.at(id);
    std::vector<FeatureVector> vectors;
    vectors.reserve(g.media.size());
    for (const TemplateId& mid : g.media) {
      const Template* t = store.find(mid);
      if (t == nullptr) {
        raise(ErrorCode::kMissingTemplate,
              "group '" + id + "' references missing media template '" + mid +
                  "'");
      }
      vectors.push_back(t->features);
    }
    FusionMethod fm = method == "mean"
                          ? FusionMethod::mean()
                          : method == "weighted"
                                ? FusionMethod::weighted_mean(g.weights)
                                : FusionMethod::custom(method);
    Template t;
    t.id = id;
    t.subject = g.subject;
    t.features = fuse(vectors, fm);
    t.media_ids = g.media;
    fused.push_back(std::move(t));
  }

  const std::size_t bytes = write_templates(fused, a.out);
  const std::string method_name = method == "weighted" ? "weighted_mean"
                                                       : method;
  out << "fused " << records.size() << " media templates into "
      << fused.size() << " templates using " << method_name << " (" << bytes
      << " bytes) -> " << a.out << "\n";
  return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::vector<std::string> templates;
  std::string pairs;
  std::string out_dir;
  std::string measure = "cosine";
  std::string calibration = "best-accuracy";
  std::size_t workers = 0;
  std::size_t batch = 64;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const SimilarityMeasure measure = similarity_measure_from_string(a.measure);
  const Calibration cal = calibration_from_string(a.calibration);
  const std::size_t workers = resolve_workers(a.workers);
  (void)a.batch;  // pair scoring is per-pair, not matrix-based

  TemplateStore store = load_store(a.templates);
  ComparisonProtocol protocol{read_pairs_manifest(a.pairs)};
  std::vector<ScoreSet> folds = run_comparison(protocol, store, measure);

  fs::create_directories(a.out_dir);
  EvaluationReport report;
  report.tool_version = kVersion;
  report.protocol = "verification";
  report.config = {a.measure, "precomputed", "n/a", "n/a",
                   to_string(cal),  workers};

  std::vector<Curve> roc_curves, pr_curves;
  std::vector<ordered_json> fold_entries;
  double auc_sum = 0.0, eer_sum = 0.0;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const RocResult rr = roc(folds[f]);
    const EerResult er = eer(folds[f]);
    const double fold_auc = auc(rr.curve);
    const Curve pr = precision_recall(folds[f]);

    const std::string roc_name = "roc_fold" + std::to_string(f) + ".csv";
    const std::string pr_name = "pr_fold" + std::to_string(f) + ".csv";
    write_curve_csv(rr.curve, (fs::path(a.out_dir) / roc_name).string());
    write_curve_csv(pr, (fs::path(a.out_dir) / pr_name).string());
    report.curve_files.push_back(roc_name);
    report.curve_files.push_back(pr_name);

    ordered_json entry;
    entry["fold"] = f;
    entry["n_genuine"] = folds[f].genuine.size();
    entry["n_impostor"] = folds[f].impostor.size();
    entry["auc"] = fold_auc;
    entry["eer"] = er.eer;
    entry["eer_threshold"] = json_number(er.threshold);
    fold_entries.push_back(std::move(entry));

    roc_curves.push_back(rr.curve);
    pr_curves.push_back(pr);
    auc_sum += fold_auc;
    eer_sum += er.eer;
  }

  const AggregatedCurve roc_mean = aggregate_curves(roc_curves);
  const AggregatedCurve pr_mean = aggregate_curves(pr_curves);
  write_curve_csv(roc_mean.mean_curve,
                  (fs::path(a.out_dir) / "roc_mean.csv").string());
  write_curve_csv(pr_mean.mean_curve,
                  (fs::path(a.out_dir) / "pr_mean.csv").string());
  report.curve_files.push_back("roc_mean.csv");
  report.curve_files.push_back("pr_mean.csv");

  double acc_mean = 0.0;
  std::string applied_calibration;
  if (folds.size() >= 2) {
    const KfoldResult kf = kfold_accuracy(folds, cal);
    acc_mean = kf.mean_accuracy;
    applied_calibration = to_string(cal);
    for (std::size_t f = 0; f < folds.size(); ++f) {
      fold_entries[f]["accuracy"] = kf.per_fold[f];
      fold_entries[f]["accuracy_threshold"] = json_number(kf.thresholds[f]);
      fold_entries[f]["calibration_sources"] = kf.calibration_sources[f];
    }
  } else {
    const AccuracyResult ar = accuracy_best(folds[0]);
    acc_mean = ar.accuracy;
    applied_calibration = "best-threshold (single fold)";
    fold_entries[0]["accuracy"] = ar.accuracy;
    fold_entries[0]["accuracy_threshold"] = json_number(ar.threshold);
  }

  report.metrics["folds"] = fold_entries;
  ordered_json summary;
  summary["n_folds"] = folds.size();
  summary["auc_mean"] = auc_sum / folds.size();
  summary["eer_mean"] = eer_sum / folds.size();
  summary["accuracy_mean"] = acc_mean;
  summary["calibration"] = applied_calibration;
  report.metrics["summary"] = std::move(summary);

  write_report(report, (fs::path(a.out_dir) / "report.json").string());
  out << "verification: " << folds.size() << " fold(s), mean AUC "
      << fmt4(auc_sum / folds.size()) << ", mean EER "
      << fmt4(eer_sum / folds.size()) << ", mean ACC " << fmt4(acc_mean)
      << " [" << applied_calibration << "] -> " << a.out_dir << "\n";
  return 0;
}

// -------------------------------------------------------------- search ----

struct SearchArgs {
  std::vector<std::string> templates;
  std::string gallery;
  std::string probes;
  std::string out_dir;
  std::string mode = "closed";
  std::string measure = "cosine";
  std::string tie_policy = "optimistic";
  std::string fnir_convention = "rank1-and-threshold";
  std::size_t workers = 0;
  std::size_t batch = 64;
  std::size_t max_rank = 0;  // 0 means gallery size
};

constexpr double kFpirTargets[] = {1e-2, 1e-3};

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string fpir_key(double target) {
  return "fnir@fpir=" + fmt_g(target);
}

void check_manifest_subject(const TemplateStore& store, const TemplateId& id,
                            const SubjectId& subject, const char* origin) {
  const Template& t = store.get(id);
  if (t.subject != subject) {
    raise(ErrorCode::kBadValue,
          std::string(origin) + " lists template '" + id + "' with subject '" +
              subject + "' but the store has subject '" + t.subject + "'");
  }
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const SimilarityMeasure measure = similarity_measure_from_string(a.measure);
  const SearchMode mode = search_mode_from_string(a.mode);
  const TiePolicy ties = tie_policy_from_string(a.tie_policy);
  const FnirConvention convention =
      fnir_convention_from_string(a.fnir_convention);
  const std::size_t workers = resolve_workers(a.workers);

  TemplateStore store = load_store(a.templates);
  const auto gallery_records = read_gallery_manifest(a.gallery);
  const auto probe_records = read_probe_manifest(a.probes);
  if (gallery_records.empty()) {
    raise(ErrorCode::kEmptyInput, "'" + a.gallery + "' lists no templates");
  }
  if (probe_records.empty()) {
    raise(ErrorCode::kEmptyInput, "'" + a.probes + "' lists no probes");
  }

  SearchProtocol protocol;
  protocol.mode = mode;
  std::map<std::string, std::size_t> set_index;
  for (const auto& r : gallery_records) {
    if (!store.contains(r.template_id)) {
      raise(ErrorCode::kMissingTemplate,
            "gallery set '" + r.gallery_set +
                "' references unknown template '" + r.template_id + "'");
    }
    check_manifest_subject(store, r.template_id, r.subject_id,
                           "gallery manifest");
    auto [it, inserted] =
        set_index.emplace(r.gallery_set, protocol.gallery_sets.size());
    if (inserted) {
      protocol.gallery_sets.push_back({r.gallery_set, {}});
    }
    protocol.gallery_sets[it->second].templates.push_back(r.template_id);
  }
  for (const auto& r : probe_records) {
    if (!store.contains(r.template_id)) {
      raise(ErrorCode::kMissingTemplate,
            "probe manifest references unknown template '" + r.template_id +
                "'");
    }
    check_manifest_subject(store, r.template_id, r.subject_id,
                           "probe manifest");
    protocol.probes.push_back(r.template_id);
  }

  const std::vector<SearchResult> results =
      run_search(protocol, store, measure, a.batch, workers, ties);

  fs::create_directories(a.out_dir);
  EvaluationReport report;
  report.tool_version = kVersion;
  report.protocol =
      mode == SearchMode::kClosed ? "closed-set-search" : "open-set-search";
  report.config = {a.measure,         "precomputed",
                   to_string(ties),   to_string(convention),
                   "n/a",             workers};

  std::vector<Curve> cmc_curves, iet_curves;
  std::vector<ordered_json> set_entries;
  for (const SearchResult& r : results) {
    std::size_t n_mated = 0;
    for (const RankResult& p : r.ranks) n_mated += p.mated ? 1 : 0;
    const std::size_t n_nonmated = r.ranks.size() - n_mated;

    const std::size_t max_rank =
        a.max_rank > 0 ? a.max_rank : r.matrix.cols();
    const Curve c = cmc(r.ranks, max_rank);
    const std::string cmc_name =
        "cmc_" + sanitize_name(r.gallery_set) + ".csv";
    write_curve_csv(c, (fs::path(a.out_dir) / cmc_name).string());
    report.curve_files.push_back(cmc_name);
    cmc_curves.push_back(c);

    ordered_json entry;
    entry["gallery_set"] = r.gallery_set;
    entry["n_gallery"] = r.matrix.cols();
    entry["n_probes"] = r.ranks.size();
    entry["n_mated"] = n_mated;
    entry["n_nonmated"] = n_nonmated;
    for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{10}}) {
      if (k <= c.points.size()) {
        entry["cmc@" + std::to_string(k)] = c.points[k - 1].y;
      }
    }

    if (mode == SearchMode::kOpen) {
      if (n_nonmated == 0) {
        report.notes.push_back("gallery set '" + r.gallery_set +
                               "': no non-mated probes; IET skipped");
      } else {
        const IetResult ir = iet(r.ranks, convention);
        const std::string iet_name =
            "iet_" + sanitize_name(r.gallery_set) + ".csv";
        write_curve_csv(ir.curve, (fs::path(a.out_dir) / iet_name).string());
        report.curve_files.push_back(iet_name);
        iet_curves.push_back(ir.curve);
        for (double target : kFpirTargets) {
          // Below 1/n the target is finer than the measurable resolution.
          if (target * static_cast<double>(n_nonmated) >= 1.0) {
            entry[fpir_key(target)] = sample_curve(ir.curve, target);
          } else {
            report.notes.push_back(
                "gallery set '" + r.gallery_set + "': FPIR=" + fmt_g(target) +
                " is below resolution 1/" + std::to_string(n_nonmated) +
                "; " + fpir_key(target) + " omitted");
          }
        }
      }
    }
    set_entries.push_back(std::move(entry));
  }

  const AggregatedCurve cmc_mean = aggregate_curves(cmc_curves);
  write_curve_csv(cmc_mean.mean_curve,
                  (fs::path(a.out_dir) / "cmc_mean.csv").string());
  report.curve_files.push_back("cmc_mean.csv");

  ordered_json summary;
  summary["n_gallery_sets"] = results.size();
  for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{10}}) {
    if (k <= cmc_mean.mean_curve.points.size()) {
      summary["cmc@" + std::to_string(k)] =
          cmc_mean.mean_curve.points[k - 1].y;
    }
  }
  if (!iet_curves.empty()) {
    const AggregatedCurve iet_mean = aggregate_curves(iet_curves);
    write_curve_csv(iet_mean.mean_curve,
                    (fs::path(a.out_dir) / "iet_mean.csv").string());
    report.curve_files.push_back("iet_mean.csv");
    for (double target : kFpirTargets) {
      const std::string key = fpir_key(target);
      bool everywhere = true;
      for (const auto& entry : set_entries) {
        everywhere = everywhere && entry.contains(key);
      }
      if (everywhere) {
        summary[key] = sample_curve(iet_mean.mean_curve, target);
      }
    }
  }

  report.metrics["gallery_sets"] = set_entries;
  report.metrics["summary"] = summary;
  write_report(report, (fs::path(a.out_dir) / "report.json").string());

  std::string cmc1 = "n/a";
  if (summary.contains("cmc@1")) {
    cmc1 = fmt4(summary["cmc@1"].get<double>());
  }
  out << report.protocol << ": " << results.size() << " gallery set(s), "
      << protocol.probes.size() << " probes, mean CMC@1 " << cmc1 << " -> "
      << a.out_dir << "\n";
  return 0;
}

// ----------------------------------------------------------- aggregate ----

struct AggregateArgs {
  std::vector<std::string> curves;
  std::string out;
  std::string grid = "auto";
  std::size_t points = 100;
  double x_min = std::nan("");
  double x_max = std::nan("");
};

int cmd_aggregate(const AggregateArgs& a, std::ostream& out) {
  std::vector<Curve> curves;
  curves.reserve(a.curves.size());
  for (const std::string& path : a.curves) {
    curves.push_back(read_curve_csv(path));
  }
  if (curves.empty()) {
    raise(ErrorCode::kEmptyInput, "no curves to aggregate");
  }

  std::string grid = a.grid;
  if (grid == "auto") {
    grid = curves.front().kind == CurveKind::kPr ? "linear" : "log10";
  }
  GridSpec spec;
  if (grid == "linear") {
    spec = GridSpec::linear_grid();
  } else if (grid == "log10") {
    spec = GridSpec::log10_grid();
  } else {
    raise(ErrorCode::kInvalidArgument, "unknown grid '" + a.grid + "'");
  }
  spec.n_points = a.points;
  if (!std::isnan(a.x_min)) spec.x_min = a.x_min;
  if (!std::isnan(a.x_max)) spec.x_max = a.x_max;

  const AggregatedCurve agg = aggregate_curves(curves, spec);
  write_curve_csv(agg.mean_curve, a.out);
  out << "aggregated " << curves.size() << " "
      << to_string(curves.front().kind) << " curve(s) onto "
      << agg.grid.size() << " grid points -> " << a.out << "\n";
  return 0;
}

// --------------------------------------------------------------- synth ----

struct SynthPopulationArgs {
  std::size_t subjects = 50;
  std::size_t probes_mated = 100;
  std::size_t probes_nonmated = 20;
  std::size_t dim = 16;
  std::size_t media_per_subject = 3;
  std::size_t folds = 5;
  std::size_t gallery_sets = 1;
  double within_sd = 0.1;
  double between_sd = 1.0;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_synth_population(const SynthPopulationArgs& a, std::ostream& out) {
  if (a.gallery_sets == 0 || a.gallery_sets > a.subjects) {
    raise(ErrorCode::kInvalidArgument,
          "--gallery-sets must be between 1 and the subject count");
  }
  SyntheticPopulation p;
  p.n_subjects = a.subjects;
  p.n_probe_mated = a.probes_mated;
  p.n_probe_nonmated = a.probes_nonmated;
  p.dim = a.dim;
  p.within_class_sd = a.within_sd;
  p.between_class_sd = a.between_sd;
  p.seed = a.seed;
  const SyntheticMediaData d = sample_media_population(p, a.media_per_subject);

  fs::create_directories(a.out_dir);
  const auto path = [&](const char* name) {
    return (fs::path(a.out_dir) / name).string();
  };
  write_templates(d.media, path("media.ftpl"));
  write_media_map_manifest(d.media_map, path("media_map.csv"));
  write_templates(d.probes, path("probes.ftpl"));

  std::vector<ProbeRecord> probe_records;
  for (const Template& t : d.probes) {
    probe_records.push_back({t.id, t.subject});
  }
  write_probe_manifest(probe_records, path("probes.csv"));

  // Gallery manifest over the fused ids the fuse step will produce;
  // subjects are split round-robin across the requested sets.
  std::vector<Template> fused_refs;
  std::set<TemplateId> seen;
  for (const auto& r : d.media_map) {
    if (seen.insert(r.fused_template_id).second) {
      Template t;
      t.id = r.fused_template_id;
      t.subject = r.subject_id;
      fused_refs.push_back(std::move(t));
    }
  }
  std::vector<GalleryRecord> gallery_records;
  for (std::size_t i = 0; i < fused_refs.size(); ++i) {
    const std::string set_name =
        "G" + std::to_string(i % a.gallery_sets + 1);
    gallery_records.push_back(
        {set_name, fused_refs[i].id, fused_refs[i].subject});
  }
  std::stable_sort(gallery_records.begin(), gallery_records.end(),
                   [](const GalleryRecord& x, const GalleryRecord& y) {
                     return x.gallery_set < y.gallery_set;
                   });
  write_gallery_manifest(gallery_records, path("gallery.csv"));

  const SyntheticData pair_view{fused_refs, d.probes};
  write_pairs_manifest(make_verification_pairs(pair_view, a.folds),
                       path("pairs.csv"));

  out << "synthesized population (seed " << a.seed << "): " << a.subjects
      << " subjects, " << d.media.size() << " media templates, "
      << d.probes.size() << " probes, " << a.gallery_sets
      << " gallery set(s) -> " << a.out_dir << "\n";
  return 0;
}

struct SynthPairsArgs {
  double genuine_mean = 0.6;
  double genuine_sd = 0.1;
  double impostor_mean = 0.4;
  double impostor_sd = 0.1;
  std::size_t n_genuine = 1000;
  std::size_t n_impostor = 1000;
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_synth_pairs(const SynthPairsArgs& a, std::ostream& out) {
  GaussianScoreModel m;
  m.genuine_mean = a.genuine_mean;
  m.genuine_sd = a.genuine_sd;
  m.impostor_mean = a.impostor_mean;
  m.impostor_sd = a.impostor_sd;
  m.n_genuine = a.n_genuine;
  m.n_impostor = a.n_impostor;
  m.seed = a.seed;
  const SyntheticPairData d = realize_score_pairs(m, a.folds);

  fs::create_directories(a.out_dir);
  write_templates(d.templates,
                  (fs::path(a.out_dir) / "templates.ftpl").string());
  write_pairs_manifest(d.pairs,
                       (fs::path(a.out_dir) / "pairs.csv").string());
  out << "synthesized " << d.pairs.size() << " labeled pairs over "
      << a.folds << " fold(s) (seed " << a.seed << ") -> " << a.out_dir
      << "\n";
  return 0;
}

// ---------------------------------------------------------------- plot ----

struct PlotArgs {
  std::vector<std::string> curves;
  std::vector<std::string> labels;
  std::string out;
  std::string title;
  std::string x_scale = "auto";
  std::size_t width = 640;
  std::size_t height = 480;
  double y_min = std::nan("");
  double y_max = std::nan("");
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  if (!a.labels.empty() && a.labels.size() != a.curves.size()) {
    raise(ErrorCode::kInvalidArgument,
          "--label count must match --curve count");
  }
  if (std::isnan(a.y_min) != std::isnan(a.y_max)) {
    raise(ErrorCode::kInvalidArgument,
          "--y-min and --y-max must be given together");
  }

  PlotSpec spec;
  spec.title = a.title;
  spec.width_px = a.width;
  spec.height_px = a.height;
  if (!std::isnan(a.y_min)) spec.y_range = {a.y_min, a.y_max};
  for (std::size_t i = 0; i < a.curves.size(); ++i) {
    const std::string label =
        a.labels.empty() ? file_stem(a.curves[i]) : a.labels[i];
    spec.series.push_back({label, read_curve_csv(a.curves[i])});
  }
  if (spec.series.empty()) {
    raise(ErrorCode::kEmptySeries, "plot has no series");
  }

  if (a.x_scale == "linear") {
    spec.x_scale = PlotSpec::XScale::kLinear;
  } else if (a.x_scale == "log10") {
    spec.x_scale = PlotSpec::XScale::kLog10;
  } else if (a.x_scale == "auto") {
    const CurveKind kind = spec.series.front().curve.kind;
    bool all_positive = true;
    for (const PlotSeries& s : spec.series) {
      for (const CurvePoint& p : s.curve.points) {
        all_positive = all_positive && p.x > 0.0;
      }
    }
    spec.x_scale = (kind == CurveKind::kRoc || kind == CurveKind::kIet) &&
                           all_positive
                       ? PlotSpec::XScale::kLog10
                       : PlotSpec::XScale::kLinear;
  } else {
    raise(ErrorCode::kInvalidArgument,
          "unknown x scale '" + a.x_scale + "'");
  }

  write_text_file(a.out, render_svg(spec));
  out << "plotted " << spec.series.size() << " series -> " << a.out << "\n";
  return 0;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingTemplate:
    case ErrorCode::kDuplicateTemplateId:
      return 2;
    case ErrorCode::kEmptyFold:
    case ErrorCode::kEmptyClass:
    case ErrorCode::kNoMatedProbes:
    case ErrorCode::kNoNonMatedProbes:
    case ErrorCode::kEmptySet:
    case ErrorCode::kTooFewFolds:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kEmptySeries:
      return 3;
    case ErrorCode::kClosedSetViolation:
    case ErrorCode::kDuplicateSubject:
      return 4;
    default:
      return 1;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"biometric recognition evaluation toolkit"};
  app.name("biomeval");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  int rc = 0;

  FuseArgs fuse_args;
  auto* fuse_cmd = app.add_subcommand(
      "fuse", "Fuse per-media feature vectors into one template per group");
  fuse_cmd->add_option("--features", fuse_args.features,
                       "Media template file (.ftpl or .csv)")
      ->required();
  fuse_cmd->add_option("--map", fuse_args.map, "media_map manifest")
      ->required();
  fuse_cmd->add_option("--method", fuse_args.method,
                       "mean, weighted, a registered name, or auto")
      ->capture_default_str();
  fuse_cmd->add_option("--out", fuse_args.out, "Output template file")
      ->required();
  fuse_cmd->callback([&] { rc = cmd_fuse(fuse_args, out); });

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Score labeled pairs and report ROC, PR, AUC, EER and ACC");
  verify_cmd
      ->add_option("--templates", verify_args.templates,
                   "Template files (repeatable)")
      ->required();
  verify_cmd->add_option("--pairs", verify_args.pairs, "pairs manifest")
      ->required();
  verify_cmd->add_option("--out-dir", verify_args.out_dir, "Output directory")
      ->required();
  verify_cmd->add_option("--measure", verify_args.measure,
                         "cosine or neg-euclidean")
      ->capture_default_str();
  verify_cmd
      ->add_option("--calibration", verify_args.calibration,
                   "best-accuracy or eer-threshold")
      ->capture_default_str();
  verify_cmd
      ->add_option("--workers", verify_args.workers,
                   "Worker threads (default: BIOMEVAL_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  verify_cmd->callback([&] { rc = cmd_verify(verify_args, out); });

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand(
      "search", "Search probes against gallery sets and report CMC and IET");
  search_cmd
      ->add_option("--templates", search_args.templates,
                   "Template files (repeatable)")
      ->required();
  search_cmd->add_option("--gallery", search_args.gallery, "gallery manifest")
      ->required();
  search_cmd->add_option("--probes", search_args.probes, "probe manifest")
      ->required();
  search_cmd->add_option("--out-dir", search_args.out_dir, "Output directory")
      ->required();
  search_cmd->add_option("--mode", search_args.mode, "closed or open")
      ->capture_default_str();
  search_cmd->add_option("--measure", search_args.measure,
                         "cosine or neg-euclidean")
      ->capture_default_str();
  search_cmd
      ->add_option("--tie-policy", search_args.tie_policy,
                   "optimistic or pessimistic")
      ->capture_default_str();
  search_cmd
      ->add_option("--fnir-convention", search_args.fnir_convention,
                   "rank1-and-threshold or threshold-only")
      ->capture_default_str();
  search_cmd
      ->add_option("--workers", search_args.workers,
                   "Worker threads (default: BIOMEVAL_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--batch", search_args.batch, "Rows per work block")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search_cmd
      ->add_option("--max-rank", search_args.max_rank,
                   "CMC depth (default: gallery size)")
      ->check(CLI::PositiveNumber);
  search_cmd->callback([&] { rc = cmd_search(search_args, out); });

  AggregateArgs aggregate_args;
  auto* aggregate_cmd = app.add_subcommand(
      "aggregate", "Average same-kind curves onto a common grid");
  aggregate_cmd
      ->add_option("--curves", aggregate_args.curves,
                   "Curve CSVs (repeatable)")
      ->required();
  aggregate_cmd->add_option("--out", aggregate_args.out, "Output curve CSV")
      ->required();
  aggregate_cmd
      ->add_option("--grid", aggregate_args.grid, "auto, linear or log10")
      ->capture_default_str();
  aggregate_cmd->add_option("--points", aggregate_args.points, "Grid size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  aggregate_cmd->add_option("--x-min", aggregate_args.x_min, "Grid start");
  aggregate_cmd->add_option("--x-max", aggregate_args.x_max, "Grid end");
  aggregate_cmd->callback([&] { rc = cmd_aggregate(aggregate_args, out); });

  auto* synth_cmd =
      app.add_subcommand("synth", "Generate synthetic evaluation data");
  synth_cmd->require_subcommand(1);

  SynthPopulationArgs pop_args;
  auto* pop_cmd = synth_cmd->add_subcommand(
      "population",
      "Gallery media, probes and manifests for a full pipeline run");
  pop_cmd->add_option("--subjects", pop_args.subjects, "Enrolled subjects")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pop_cmd
      ->add_option("--probes-mated", pop_args.probes_mated, "Mated probes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pop_cmd
      ->add_option("--probes-nonmated", pop_args.probes_nonmated,
                   "Non-mated probes (0 allowed)")
      ->capture_default_str();
  pop_cmd->add_option("--dim", pop_args.dim, "Feature dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pop_cmd
      ->add_option("--media-per-subject", pop_args.media_per_subject,
                   "Media templates per subject")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pop_cmd->add_option("--folds", pop_args.folds, "Verification folds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pop_cmd
      ->add_option("--gallery-sets", pop_args.gallery_sets,
                   "Round-robin subject split")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pop_cmd->add_option("--within-sd", pop_args.within_sd, "Within-class sd")
      ->capture_default_str();
  pop_cmd
      ->add_option("--between-sd", pop_args.between_sd, "Between-class sd")
      ->capture_default_str();
  pop_cmd->add_option("--seed", pop_args.seed, "Generator seed")
      ->capture_default_str();
  pop_cmd->add_option("--out-dir", pop_args.out_dir, "Output directory")
      ->required();
  pop_cmd->callback([&] { rc = cmd_synth_population(pop_args, out); });

  SynthPairsArgs pairs_args;
  auto* pairs_cmd = synth_cmd->add_subcommand(
      "pairs", "Labeled pairs whose cosine scores follow a Gaussian model");
  pairs_cmd
      ->add_option("--genuine-mean", pairs_args.genuine_mean, "Genuine mean")
      ->capture_default_str();
  pairs_cmd->add_option("--genuine-sd", pairs_args.genuine_sd, "Genuine sd")
      ->capture_default_str();
  pairs_cmd
      ->add_option("--impostor-mean", pairs_args.impostor_mean,
                   "Impostor mean")
      ->capture_default_str();
  pairs_cmd
      ->add_option("--impostor-sd", pairs_args.impostor_sd, "Impostor sd")
      ->capture_default_str();
  pairs_cmd
      ->add_option("--n-genuine", pairs_args.n_genuine, "Genuine pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pairs_cmd
      ->add_option("--n-impostor", pairs_args.n_impostor, "Impostor pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pairs_cmd->add_option("--folds", pairs_args.folds, "Fold count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pairs_cmd->add_option("--seed", pairs_args.seed, "Generator seed")
      ->capture_default_str();
  pairs_cmd->add_option("--out-dir", pairs_args.out_dir, "Output directory")
      ->required();
  pairs_cmd->callback([&] { rc = cmd_synth_pairs(pairs_args, out); });

  PlotArgs plot_args;
  auto* plot_cmd =
      app.add_subcommand("plot", "Render curve CSVs to a standalone SVG");
  plot_cmd
      ->add_option("--curve", plot_args.curves, "Curve CSVs (repeatable)")
      ->required();
  plot_cmd->add_option("--label", plot_args.labels,
                       "Series labels (default: file stems)");
  plot_cmd->add_option("--out", plot_args.out, "Output SVG path")->required();
  plot_cmd->add_option("--title", plot_args.title, "Figure title");
  plot_cmd
      ->add_option("--x-scale", plot_args.x_scale, "auto, linear or log10")
      ->capture_default_str();
  plot_cmd->add_option("--width", plot_args.width, "Width in px")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot_cmd->add_option("--height", plot_args.height, "Height in px")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot_cmd->add_option("--y-min", plot_args.y_min, "Fixed y range start");
  plot_cmd->add_option("--y-max", plot_args.y_max, "Fixed y range end");
  plot_cmd->callback([&] { rc = cmd_plot(plot_args, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace biomeval
