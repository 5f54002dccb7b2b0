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

#include "biomeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace biomeval {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t count_ge(const std::vector<double>& sorted_asc, double threshold) {
  return sorted_asc.end() -
         std::lower_bound(sorted_asc.begin(), sorted_asc.end(), threshold);
}

// Observed-score threshold sweep shared by ROC, PR, EER and ACC. Thresholds
// are the distinct scores in descending order behind a +inf sentinel;
// counts are exact.
struct Sweep {
  std::vector<double> thresholds;
  std::vector<std::size_t> n_genuine_ge;
  std::vector<std::size_t> n_impostor_ge;
  std::size_t n_genuine = 0;
  std::size_t n_impostor = 0;

  double far(std::size_t i) const {
    return n_impostor == 0
               ? 0.0
               : static_cast<double>(n_impostor_ge[i]) / n_impostor;
  }
  double tar(std::size_t i) const {
    return n_genuine == 0 ? 0.0
                          : static_cast<double>(n_genuine_ge[i]) / n_genuine;
  }
};

Sweep make_sweep(const ScoreSet& oriented) {
  std::vector<double> genuine = oriented.genuine;
  std::vector<double> impostor = oriented.impostor;
  std::sort(genuine.begin(), genuine.end());
  std::sort(impostor.begin(), impostor.end());

  std::vector<double> thresholds;
  thresholds.reserve(genuine.size() + impostor.size() + 1);
  thresholds.push_back(kInf);
  thresholds.insert(thresholds.end(), genuine.begin(), genuine.end());
  thresholds.insert(thresholds.end(), impostor.begin(), impostor.end());
  std::sort(thresholds.begin() + 1, thresholds.end(),
            [](double a, double b) { return a > b; });
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  Sweep sweep;
  sweep.thresholds = std::move(thresholds);
  sweep.n_genuine = genuine.size();
  sweep.n_impostor = impostor.size();
  sweep.n_genuine_ge.reserve(sweep.thresholds.size());
  sweep.n_impostor_ge.reserve(sweep.thresholds.size());
  for (double t : sweep.thresholds) {
    // count_ge of the +inf sentinel is 0: all stored scores are finite.
    sweep.n_genuine_ge.push_back(count_ge(genuine, t));
    sweep.n_impostor_ge.push_back(count_ge(impostor, t));
  }
  return sweep;
}

void require_both_classes(const ScoreSet& s) {
  if (s.genuine.empty() || s.impostor.empty()) {
    raise(ErrorCode::kEmptyClass,
          s.genuine.empty() ? "no genuine scores" : "no impostor scores");
  }
}

}  // namespace

RocResult roc(const ScoreSet& s) {
  require_both_classes(s);
  const Sweep sweep = make_sweep(orient_scores(s));

  RocResult result;
  result.curve.kind = CurveKind::kRoc;
  result.curve.x_axis = "FAR";
  result.curve.y_axis = "TAR";
  result.points.reserve(sweep.thresholds.size());
  result.curve.points.reserve(sweep.thresholds.size());
  for (std::size_t i = 0; i < sweep.thresholds.size(); ++i) {
    const double far = sweep.far(i), tar = sweep.tar(i);
    result.points.push_back({sweep.thresholds[i], far, tar});
    result.curve.points.push_back({far, tar});
  }
  return result;
}

double auc(const Curve& roc_curve) {
  if (roc_curve.kind != CurveKind::kRoc) {
    raise(ErrorCode::kInvalidArgument, "auc expects a ROC curve");
  }
  double area = 0.0;
  for (std::size_t i = 1; i < roc_curve.points.size(); ++i) {
    const auto& p0 = roc_curve.points[i - 1];
    const auto& p1 = roc_curve.points[i];
    area += (p1.x - p0.x) * 0.5 * (p0.y + p1.y);
  }
  return area;
}

EerResult eer(const ScoreSet& s) {
  require_both_classes(s);
  const Sweep sweep = make_sweep(orient_scores(s));

  // diff = FAR - FNR is non-decreasing along the descending-threshold walk:
  // -1 at the sentinel, +1 at the minimum score. Find the sign change.
  std::size_t crossing = 0;
  double diff = -1.0, prev_diff = -1.0;
  for (std::size_t i = 0; i < sweep.thresholds.size(); ++i) {
    diff = sweep.far(i) - (1.0 - sweep.tar(i));
    if (diff >= 0.0) {
      crossing = i;
      break;
    }
    prev_diff = diff;
  }
  if (diff == 0.0) {
    return {sweep.far(crossing), sweep.thresholds[crossing]};
  }
  // crossing >= 1 here because the sentinel diff is -1.
  const double alpha = -prev_diff / (diff - prev_diff);
  const double far0 = sweep.far(crossing - 1), far1 = sweep.far(crossing);
  const double t0 = sweep.thresholds[crossing - 1];
  const double t1 = sweep.thresholds[crossing];
  EerResult result;
  result.eer = far0 + alpha * (far1 - far0);
  result.threshold = std::isinf(t0) ? t1 : t0 + alpha * (t1 - t0);
  return result;
}

Curve precision_recall(const ScoreSet& s) {
  if (s.genuine.empty()) {
    raise(ErrorCode::kEmptyClass, "no genuine scores");
  }
  const Sweep sweep = make_sweep(orient_scores(s));

  Curve curve;
  curve.kind = CurveKind::kPr;
  curve.x_axis = "recall";
  curve.y_axis = "precision";
  curve.points.reserve(sweep.thresholds.size());
  for (std::size_t i = 0; i < sweep.thresholds.size(); ++i) {
    const std::size_t tp = sweep.n_genuine_ge[i];
    const std::size_t fp = sweep.n_impostor_ge[i];
    const double recall = sweep.tar(i);
    const double precision =
        (tp + fp) == 0 ? 1.0 : static_cast<double>(tp) / (tp + fp);
    curve.points.push_back({recall, precision});
  }
  return curve;
}

double accuracy_at(const ScoreSet& s, double threshold) {
  if (s.genuine.empty() && s.impostor.empty()) {
    raise(ErrorCode::kEmptyClass, "no scores at all");
  }
  const ScoreSet oriented = orient_scores(s);
  std::vector<double> genuine = oriented.genuine;
  std::vector<double> impostor = oriented.impostor;
  std::sort(genuine.begin(), genuine.end());
  std::sort(impostor.begin(), impostor.end());
  const std::size_t correct = count_ge(genuine, threshold) +
                              (impostor.size() - count_ge(impostor, threshold));
  return static_cast<double>(correct) / (genuine.size() + impostor.size());
}

AccuracyResult accuracy_best(const ScoreSet& s) {
  if (s.genuine.empty() && s.impostor.empty()) {
    raise(ErrorCode::kEmptyClass, "no scores at all");
  }
  const ScoreSet oriented = orient_scores(s);
  const Sweep sweep = make_sweep(oriented);
  const double total =
      static_cast<double>(sweep.n_genuine + sweep.n_impostor);

  AccuracyResult best{-1.0, 0.0};
  // Ascending threshold order so ties resolve to the lowest threshold.
  for (std::size_t idx = sweep.thresholds.size(); idx-- > 0;) {
    const std::size_t correct =
        sweep.n_genuine_ge[idx] + (sweep.n_impostor - sweep.n_impostor_ge[idx]);
    const double acc = static_cast<double>(correct) / total;
    if (acc > best.accuracy) {
      best = {acc, sweep.thresholds[idx]};
    }
  }
  return best;
}

const char* to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kOptimistic: return "optimistic";
    case TiePolicy::kPessimistic: return "pessimistic";
  }
  return "?";
}

TiePolicy tie_policy_from_string(const std::string& name) {
  if (name == "optimistic") return TiePolicy::kOptimistic;
  if (name == "pessimistic") return TiePolicy::kPessimistic;
  raise(ErrorCode::kInvalidArgument, "unknown tie policy '" + name + "'");
}

std::vector<RankResult> rank_probes(const SimilarityMatrix& m,
                                    TiePolicy policy) {
  if (m.cols() == 0 && m.rows() > 0) {
    raise(ErrorCode::kEmptyInput, "gallery is empty");
  }
  std::unordered_map<SubjectId, std::size_t> gallery_column;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    gallery_column.emplace(m.gallery_subjects()[j], j);
  }

  std::vector<RankResult> results;
  results.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RankResult r;
    r.probe_id = m.probe_ids()[i];
    double top = -kInf;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      top = std::max(top, m.at(i, j));
    }
    r.top_score = top;
    auto it = gallery_column.find(m.probe_subjects()[i]);
    if (it != gallery_column.end()) {
      const std::size_t mate = it->second;
      const double mate_score = m.at(i, mate);
      std::size_t above = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == mate) continue;
        if (policy == TiePolicy::kOptimistic ? m.at(i, j) > mate_score
                                             : m.at(i, j) >= mate_score) {
          ++above;
        }
      }
      r.mated = true;
      r.mate_rank = static_cast<std::uint32_t>(above + 1);
      r.mate_score = mate_score;
    }
    results.push_back(std::move(r));
  }
  return results;
}

Curve cmc(const std::vector<RankResult>& results, std::uint32_t max_rank) {
  if (max_rank < 1) raise(ErrorCode::kInvalidArgument, "max_rank must be >= 1");
  std::size_t n_mated = 0;
  std::vector<std::size_t> hits_at_rank(max_rank + 1, 0);
  for (const auto& r : results) {
    if (!r.mated) continue;
    ++n_mated;
    if (*r.mate_rank <= max_rank) ++hits_at_rank[*r.mate_rank];
  }
  if (n_mated == 0) raise(ErrorCode::kNoMatedProbes, "no mated probes");

  Curve curve;
  curve.kind = CurveKind::kCmc;
  curve.x_axis = "rank";
  curve.y_axis = "identification_rate";
  curve.points.reserve(max_rank);
  std::size_t cumulative = 0;
  for (std::uint32_t k = 1; k <= max_rank; ++k) {
    cumulative += hits_at_rank[k];
    curve.points.push_back({static_cast<double>(k),
                            static_cast<double>(cumulative) / n_mated});
  }
  return curve;
}

const char* to_string(FnirConvention convention) {
  switch (convention) {
    case FnirConvention::kRank1AndThreshold: return "rank1-and-threshold";
    case FnirConvention::kThresholdOnly: return "threshold-only";
  }
  return "?";
}

FnirConvention fnir_convention_from_string(const std::string& name) {
  if (name == "rank1-and-threshold") return FnirConvention::kRank1AndThreshold;
  if (name == "threshold-only") return FnirConvention::kThresholdOnly;
  raise(ErrorCode::kInvalidArgument, "unknown FNIR convention '" + name + "'");
}

IetResult iet(const std::vector<RankResult>& results,
              FnirConvention convention) {
  std::vector<double> nonmated_top;
  std::vector<double> mate_scores;        // all mated probes
  std::vector<double> rank1_mate_scores;  // mated probes found at rank 1
  std::vector<double> thresholds;
  thresholds.push_back(kInf);
  for (const auto& r : results) {
    thresholds.push_back(r.top_score);
    if (r.mated) {
      mate_scores.push_back(*r.mate_score);
      if (*r.mate_rank == 1) rank1_mate_scores.push_back(*r.mate_score);
    } else {
      nonmated_top.push_back(r.top_score);
    }
  }
  if (mate_scores.empty()) raise(ErrorCode::kNoMatedProbes, "no mated probes");
  if (nonmated_top.empty()) {
    raise(ErrorCode::kNoNonMatedProbes, "no non-mated probes");
  }
  std::sort(thresholds.begin() + 1, thresholds.end(),
            [](double a, double b) { return a > b; });
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  std::sort(nonmated_top.begin(), nonmated_top.end());
  std::sort(mate_scores.begin(), mate_scores.end());
  std::sort(rank1_mate_scores.begin(), rank1_mate_scores.end());

  const double n_mated = static_cast<double>(mate_scores.size());
  const double n_nonmated = static_cast<double>(nonmated_top.size());
  const std::size_t n_not_rank1 = mate_scores.size() - rank1_mate_scores.size();

  IetResult result;
  result.curve.kind = CurveKind::kIet;
  result.curve.x_axis = "FPIR";
  result.curve.y_axis = "FNIR";
  for (double t : thresholds) {
    const std::size_t accepts = count_ge(nonmated_top, t);
    std::size_t misses;
    if (convention == FnirConvention::kRank1AndThreshold) {
      const std::size_t rank1_below =
          rank1_mate_scores.size() - count_ge(rank1_mate_scores, t);
      misses = n_not_rank1 + rank1_below;
    } else {
      misses = mate_scores.size() - count_ge(mate_scores, t);
    }
    const double fpir = accepts / n_nonmated;
    const double fnir = misses / n_mated;
    result.points.push_back({t, fpir, fnir});
    result.curve.points.push_back({fpir, fnir});
  }
  return result;
}

}  // namespace biomeval
