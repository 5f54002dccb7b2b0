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

#include "biomeval/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "biomeval/error.hpp"

namespace biomeval {

TemplateStore::TemplateStore(std::vector<Template> templates) {
  for (auto& t : templates) add(std::move(t));
}

void TemplateStore::add(Template t) {
  auto [it, inserted] = index_.emplace(t.id, templates_.size());
  if (!inserted) {
    raise(ErrorCode::kDuplicateTemplateId,
          "template id '" + t.id + "' already in store");
  }
  templates_.push_back(std::move(t));
}

bool TemplateStore::contains(const TemplateId& id) const {
  return index_.count(id) != 0;
}

const Template* TemplateStore::find(const TemplateId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &templates_[it->second];
}

const Template& TemplateStore::get(const TemplateId& id) const {
  const Template* t = find(id);
  if (t == nullptr) {
    raise(ErrorCode::kMissingTemplate, "unknown template '" + id + "'");
  }
  return *t;
}

const char* to_string(SearchMode m) {
  return m == SearchMode::kClosed ? "closed" : "open";
}

SearchMode search_mode_from_string(const std::string& name) {
  if (name == "closed") return SearchMode::kClosed;
  if (name == "open") return SearchMode::kOpen;
  raise(ErrorCode::kInvalidArgument, "unknown search mode '" + name + "'");
}

std::vector<ScoreSet> run_comparison(const ComparisonProtocol& p,
                                     const TemplateStore& store,
                                     SimilarityMeasure measure) {
  if (p.pairs.empty()) {
    raise(ErrorCode::kEmptyFold, "protocol has no pairs");
  }

  std::uint32_t max_fold = 0;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    const ComparisonPair& pair = p.pairs[i];
    if (pair.a == pair.b) {
      raise(ErrorCode::kInvalidArgument,
            "pair " + std::to_string(i) + " compares template '" + pair.a +
                "' to itself");
    }
    for (const TemplateId* id : {&pair.a, &pair.b}) {
      if (!store.contains(*id)) {
        raise(ErrorCode::kMissingTemplate,
              "pair " + std::to_string(i) + " references unknown template '" +
                  *id + "'");
      }
    }
    max_fold = std::max(max_fold, pair.fold);
  }

  std::vector<ScoreSet> folds(max_fold + 1);
  for (const ComparisonPair& pair : p.pairs) {
    const double s =
        similarity(store.get(pair.a).features, store.get(pair.b).features,
                   measure);
    ScoreSet& fold = folds[pair.fold];
    (pair.same ? fold.genuine : fold.impostor).push_back(s);
  }
  for (std::size_t f = 0; f < folds.size(); ++f) {
    if (folds[f].genuine.empty() && folds[f].impostor.empty()) {
      raise(ErrorCode::kEmptyFold,
            "fold " + std::to_string(f) + " has no pairs");
    }
  }
  return folds;
}

namespace {

std::string join_sorted(const std::set<SubjectId>& subjects) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : subjects) {
    if (!first) out << ", ";
    out << s;
    first = false;
  }
  return out.str();
}

}  // namespace

std::vector<SearchResult> run_search(const SearchProtocol& p,
                                     const TemplateStore& store,
                                     SimilarityMeasure measure,
                                     std::size_t batch, std::size_t workers,
                                     TiePolicy ties) {
  if (p.gallery_sets.empty()) {
    raise(ErrorCode::kEmptyInput, "protocol has no gallery sets");
  }

  std::vector<Template> probes;
  probes.reserve(p.probes.size());
  for (const TemplateId& id : p.probes) {
    if (!store.contains(id)) {
      raise(ErrorCode::kMissingTemplate,
            "probe list references unknown template '" + id + "'");
    }
    probes.push_back(store.get(id));
  }

  std::vector<SearchResult> results;
  results.reserve(p.gallery_sets.size());
  for (const GallerySet& set : p.gallery_sets) {
    std::vector<Template> gallery;
    gallery.reserve(set.templates.size());
    std::set<SubjectId> enrolled;
    for (const TemplateId& id : set.templates) {
      if (!store.contains(id)) {
        raise(ErrorCode::kMissingTemplate,
              "gallery set '" + set.name + "' references unknown template '" +
                  id + "'");
      }
      const Template& t = store.get(id);
      if (!enrolled.insert(t.subject).second) {
        raise(ErrorCode::kDuplicateSubject,
              "gallery set '" + set.name + "' enrolls subject '" + t.subject +
                  "' more than once");
      }
      gallery.push_back(t);
    }

    if (p.mode == SearchMode::kClosed) {
      std::set<SubjectId> unenrolled;
      for (const Template& probe : probes) {
        if (enrolled.count(probe.subject) == 0) {
          unenrolled.insert(probe.subject);
        }
      }
      if (!unenrolled.empty()) {
        raise(ErrorCode::kClosedSetViolation,
              "closed-set search but gallery set '" + set.name +
                  "' does not enroll probe subject(s): " +
                  join_sorted(unenrolled));
      }
    }

    SimilarityMatrix matrix =
        score_matrix(probes, gallery, measure, batch, workers);
    std::vector<RankResult> ranks = rank_probes(matrix, ties);
    results.push_back({set.name, std::move(matrix), std::move(ranks)});
  }
  return results;
}

const char* to_string(Calibration c) {
  return c == Calibration::kBestAccuracy ? "best-accuracy" : "eer-threshold";
}

Calibration calibration_from_string(const std::string& name) {
  if (name == "best-accuracy") return Calibration::kBestAccuracy;
  if (name == "eer-threshold") return Calibration::kEerThreshold;
  raise(ErrorCode::kInvalidArgument,
        "unknown calibration method '" + name + "'");
}

KfoldResult kfold_accuracy(const std::vector<ScoreSet>& folds,
                           Calibration calibration) {
  if (folds.size() < 2) {
    raise(ErrorCode::kTooFewFolds,
          "k-fold evaluation needs at least 2 folds, got " +
              std::to_string(folds.size()));
  }

  std::vector<ScoreSet> oriented;
  oriented.reserve(folds.size());
  for (const ScoreSet& f : folds) oriented.push_back(orient_scores(f));

  KfoldResult out;
  for (std::size_t f = 0; f < oriented.size(); ++f) {
    ScoreSet pooled;
    std::vector<std::size_t> sources;
    for (std::size_t g = 0; g < oriented.size(); ++g) {
      if (g == f) continue;
      pooled.genuine.insert(pooled.genuine.end(), oriented[g].genuine.begin(),
                            oriented[g].genuine.end());
      pooled.impostor.insert(pooled.impostor.end(),
                             oriented[g].impostor.begin(),
                             oriented[g].impostor.end());
      sources.push_back(g);
    }
    const double threshold = calibration == Calibration::kBestAccuracy
                                 ? accuracy_best(pooled).threshold
                                 : eer(pooled).threshold;
    out.thresholds.push_back(threshold);
    out.per_fold.push_back(accuracy_at(oriented[f], threshold));
    out.calibration_sources.push_back(std::move(sources));
  }

  double sum = 0.0;
  for (double a : out.per_fold) sum += a;
  out.mean_accuracy = sum / out.per_fold.size();
  return out;
}

GridSpec GridSpec::log10_grid(double x_min, double x_max,
                              std::size_t n_points) {
  return {Scale::kLog10, n_points, x_min, x_max};
}

GridSpec GridSpec::linear_grid(double x_min, double x_max,
                               std::size_t n_points) {
  return {Scale::kLinear, n_points, x_min, x_max};
}

std::vector<double> GridSpec::sample() const {
  if (n_points < 2) {
    raise(ErrorCode::kInvalidArgument, "grid needs at least 2 points");
  }
  if (!(x_min < x_max)) {
    raise(ErrorCode::kInvalidArgument, "grid needs x_min < x_max");
  }
  if (scale == Scale::kLog10 && x_min <= 0.0) {
    raise(ErrorCode::kInvalidArgument,
          "log10 grid needs a strictly positive x_min");
  }
  std::vector<double> xs(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double t = static_cast<double>(i) / (n_points - 1);
    if (scale == Scale::kLinear) {
      xs[i] = x_min + t * (x_max - x_min);
    } else {
      xs[i] = std::pow(10.0, std::log10(x_min) +
                                 t * (std::log10(x_max) - std::log10(x_min)));
    }
  }
  // Pin the endpoints against pow/log rounding.
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

double sample_curve(const Curve& c, double x) {
  if (c.points.empty()) {
    raise(ErrorCode::kEmptyInput, "cannot sample a curve with no points");
  }
  const auto& pts = c.points;
  if (x <= pts.front().x) return pts.front().y;
  if (x >= pts.back().x) {
    // At a duplicated final x prefer the last point.
    return pts.back().y;
  }
  // First point strictly right of x; its predecessor is the last point with
  // point.x <= x, which resolves steps to their upper value.
  auto right = std::upper_bound(
      pts.begin(), pts.end(), x,
      [](double v, const CurvePoint& p) { return v < p.x; });
  auto left = right - 1;
  if (left->x == x) return left->y;
  const double t = (x - left->x) / (right->x - left->x);
  return left->y + t * (right->y - left->y);
}

namespace {

AggregatedCurve aggregate_on_grid(const std::vector<Curve>& curves,
                                  std::vector<double> grid) {
  AggregatedCurve out;
  out.grid = std::move(grid);
  out.per_source.reserve(curves.size());
  for (const Curve& c : curves) {
    Curve r = c;
    r.points.clear();
    for (double x : out.grid) r.points.push_back({x, sample_curve(c, x)});
    out.per_source.push_back(std::move(r));
  }

  out.mean_curve = curves.front();
  out.mean_curve.points.clear();
  out.mean_curve.n_folds_aggregated = static_cast<std::uint32_t>(curves.size());
  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    double sum = 0.0;
    for (const Curve& r : out.per_source) sum += r.points[i].y;
    out.mean_curve.points.push_back({out.grid[i], sum / curves.size()});
  }
  return out;
}

void check_same_kind(const std::vector<Curve>& curves) {
  if (curves.empty()) {
    raise(ErrorCode::kEmptyInput, "no curves to aggregate");
  }
  for (const Curve& c : curves) {
    if (c.kind != curves.front().kind) {
      raise(ErrorCode::kMixedKinds,
            std::string("cannot aggregate ") + to_string(curves.front().kind) +
                " with " + to_string(c.kind));
    }
  }
}

std::vector<double> integer_rank_grid(const std::vector<Curve>& curves) {
  double max_rank = 1.0;
  for (const Curve& c : curves) {
    if (!c.points.empty()) max_rank = std::max(max_rank, c.points.back().x);
  }
  std::vector<double> grid;
  for (double r = 1.0; r <= max_rank; r += 1.0) grid.push_back(r);
  return grid;
}

}  // namespace

AggregatedCurve aggregate_curves(const std::vector<Curve>& curves,
                                 const GridSpec& spec) {
  check_same_kind(curves);
  if (curves.front().kind == CurveKind::kCmc) {
    return aggregate_on_grid(curves, integer_rank_grid(curves));
  }
  return aggregate_on_grid(curves, spec.sample());
}

AggregatedCurve aggregate_curves(const std::vector<Curve>& curves) {
  check_same_kind(curves);
  switch (curves.front().kind) {
    case CurveKind::kCmc:
      return aggregate_on_grid(curves, integer_rank_grid(curves));
    case CurveKind::kPr:
      return aggregate_curves(curves, GridSpec::linear_grid());
    default:
      return aggregate_curves(curves, GridSpec::log10_grid());
  }
}

}  // namespace biomeval
