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

// Evaluation protocols: verification over labeled pairs, closed- and
// open-set search against named gallery sets, k-fold threshold calibration,
// and cross-source curve aggregation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "biomeval/metrics.hpp"
#include "biomeval/similarity.hpp"
#include "biomeval/types.hpp"

namespace biomeval {

// Id-addressable template collection. Insertion order is preserved.
class TemplateStore {
 public:
  TemplateStore() = default;
  explicit TemplateStore(std::vector<Template> templates);

  void add(Template t);
  bool contains(const TemplateId& id) const;
  // Returns nullptr when absent.
  const Template* find(const TemplateId& id) const;
  // Raises MissingTemplate when absent.
  const Template& get(const TemplateId& id) const;
  std::size_t size() const { return templates_.size(); }
  const std::vector<Template>& templates() const { return templates_; }

 private:
  std::vector<Template> templates_;
  std::map<TemplateId, std::size_t> index_;
};

struct ComparisonPair {
  TemplateId a;
  TemplateId b;
  bool same = false;
  std::uint32_t fold = 0;
};

// Labeled template pairs for verification, partitioned into folds. Fold
// indices must cover 0..max contiguously and no pair may compare a template
// to itself.
struct ComparisonProtocol {
  std::vector<ComparisonPair> pairs;
};

struct GallerySet {
  std::string name;
  std::vector<TemplateId> templates;
};

enum class SearchMode { kClosed, kOpen };

const char* to_string(SearchMode m);
SearchMode search_mode_from_string(const std::string& name);

// Probe list searched against one or more gallery sets. Closed mode
// requires every probe subject to be enrolled in every gallery set; open
// mode permits unenrolled (non-mated) probes.
struct SearchProtocol {
  std::vector<GallerySet> gallery_sets;
  std::vector<TemplateId> probes;
  SearchMode mode = SearchMode::kClosed;
};

// Scores each fold's pairs. Genuine scores come from same=true pairs,
// impostor scores from same=false pairs; both carry the measure's
// higher-is-better orientation.
std::vector<ScoreSet> run_comparison(const ComparisonProtocol& p,
                                     const TemplateStore& store,
                                     SimilarityMeasure measure);

struct SearchResult {
  std::string gallery_set;
  SimilarityMatrix matrix;
  std::vector<RankResult> ranks;
};

// Scores every probe against each gallery set and ranks the rows. batch and
// workers are passed through to score_matrix and never affect the values.
std::vector<SearchResult> run_search(const SearchProtocol& p,
                                     const TemplateStore& store,
                                     SimilarityMeasure measure,
                                     std::size_t batch = 64,
                                     std::size_t workers = 1,
                                     TiePolicy ties = TiePolicy::kOptimistic);

enum class Calibration { kBestAccuracy, kEerThreshold };

const char* to_string(Calibration c);
Calibration calibration_from_string(const std::string& name);

struct KfoldResult {
  double mean_accuracy = 0.0;
  std::vector<double> per_fold;
  std::vector<double> thresholds;
  // Fold indices whose pooled scores fitted each evaluated fold's
  // threshold. The evaluated fold index never appears in its own list.
  std::vector<std::vector<std::size_t>> calibration_sources;
};

// Cross-validated accuracy: each fold is scored at a threshold fitted on
// the union of all other folds.
KfoldResult kfold_accuracy(const std::vector<ScoreSet>& folds,
                           Calibration calibration = Calibration::kBestAccuracy);

struct GridSpec {
  enum class Scale { kLinear, kLog10 };

  Scale scale = Scale::kLog10;
  std::size_t n_points = 100;
  double x_min = 1e-5;
  double x_max = 1.0;

  static GridSpec log10_grid(double x_min = 1e-5, double x_max = 1.0,
                             std::size_t n_points = 100);
  static GridSpec linear_grid(double x_min = 0.0, double x_max = 1.0,
                              std::size_t n_points = 100);

  std::vector<double> sample() const;
};

struct AggregatedCurve {
  Curve mean_curve;
  std::vector<Curve> per_source;
  std::vector<double> grid;
};

// Value of the curve at x under the resampling rule: linear interpolation
// between neighbors, steps evaluated at their upper value, flat beyond the
// observed range.
double sample_curve(const Curve& c, double x);

// Resamples same-kind curves onto a common grid and averages pointwise.
// CMC curves always use the integer rank grid 1..max; the overload without
// a GridSpec picks log10 for ROC/IET and linear for PR.
AggregatedCurve aggregate_curves(const std::vector<Curve>& curves,
                                 const GridSpec& spec);
AggregatedCurve aggregate_curves(const std::vector<Curve>& curves);

}  // namespace biomeval
