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

// Verification metrics (ROC, PR, ACC, EER, AUC), closed-set ranking and CMC,
// and the open-set FPIR/FNIR trade-off.
//
// All threshold sweeps run over the set of distinct observed scores plus a
// +inf sentinel, never a fixed grid: rates are exact counts and every metric
// is invariant under strictly increasing transforms of the scores. Distances
// are accepted and oriented internally.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biomeval/types.hpp"

namespace biomeval {

struct RocPoint {
  double threshold = 0.0;  // +inf for the sentinel point
  double far = 0.0;        // fraction of impostors >= threshold
  double tar = 0.0;        // fraction of genuines >= threshold
};

struct RocResult {
  Curve curve;  // x = FAR, y = TAR, sorted ascending in FAR
  std::vector<RocPoint> points;  // descending threshold order
};

// ROC over the observed-score sweep. Requires at least one score per class.
RocResult roc(const ScoreSet& s);

// Trapezoidal area under a ROC curve; equals the Mann-Whitney statistic
// P(genuine > impostor) + 1/2 P(tie) on the originating ScoreSet.
double auc(const Curve& roc_curve);

struct EerResult {
  double eer = 0.0;
  double threshold = 0.0;
};

// Rate where FAR equals FNR (= 1 - TAR). When no swept threshold achieves
// exact equality, the crossing is linearly interpolated between the adjacent
// sweep points where FAR - FNR changes sign.
EerResult eer(const ScoreSet& s);

// Precision/recall over the same sweep. A point with no predictions
// (TP + FP == 0) reports precision 1.0 by convention. Needs >= 1 genuine;
// the impostor class may be empty.
Curve precision_recall(const ScoreSet& s);

// Fraction of correct decisions at a fixed threshold: genuines >= t plus
// impostors < t, over all scores. Works with a single non-empty class.
double accuracy_at(const ScoreSet& s, double threshold);

struct AccuracyResult {
  double accuracy = 0.0;
  double threshold = 0.0;  // +inf when rejecting everything is optimal
};

// Sweeps the observed scores (plus the +inf sentinel) and returns the
// maximum accuracy; ties resolve to the lowest maximizing threshold.
AccuracyResult accuracy_best(const ScoreSet& s);

// Rank ties: optimistic never counts a tie against the mate, pessimistic
// counts every tied non-mate. Centralized here so a policy change is a
// single argument.
enum class TiePolicy { kOptimistic, kPessimistic };

const char* to_string(TiePolicy policy);
TiePolicy tie_policy_from_string(const std::string& name);

struct RankResult {
  TemplateId probe_id;
  bool mated = false;
  std::optional<std::uint32_t> mate_rank;  // 1-based, present iff mated
  double top_score = 0.0;                  // best gallery score for this probe
  std::optional<double> mate_score;        // present iff mated
};

// Per-probe ranking against the gallery. mate_rank is 1 plus the number of
// gallery scores strictly greater than the mate's (optimistic policy).
std::vector<RankResult> rank_probes(const SimilarityMatrix& m,
                                    TiePolicy policy = TiePolicy::kOptimistic);

// Cumulative match characteristic: CMC(k) is the fraction of mated probes
// whose mate appears within rank k. Non-mated probes are excluded.
Curve cmc(const std::vector<RankResult>& results, std::uint32_t max_rank);

// FNIR definition for open-set identification. rank1-and-threshold (the
// IJB/NIST form) misses a mated probe when its mate is not rank 1 or its
// mate score falls below threshold; threshold-only looks at the mate score
// alone.
enum class FnirConvention { kRank1AndThreshold, kThresholdOnly };

const char* to_string(FnirConvention convention);
FnirConvention fnir_convention_from_string(const std::string& name);

struct IetPoint {
  double threshold = 0.0;  // +inf for the sentinel
  double fpir = 0.0;       // non-mated probes with top score >= threshold
  double fnir = 0.0;       // mated probes missed under the convention
};

struct IetResult {
  Curve curve;  // x = FPIR, y = FNIR
  std::vector<IetPoint> points;  // descending threshold order
};

// Open-set identification error trade-off over the observed top scores.
// Requires at least one mated and one non-mated probe.
IetResult iet(const std::vector<RankResult>& results,
              FnirConvention convention = FnirConvention::kRank1AndThreshold);

}  // namespace biomeval
