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

// Shared domain vocabulary: templates, score sets, matrices, curves.
// Everything here is an immutable value type once constructed; scores are
// kept in 64-bit floats even though template vectors are 32-bit, so that
// threshold sweeps and trapezoid sums stay stable.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "biomeval/error.hpp"

namespace biomeval {

using SubjectId = std::string;
using TemplateId = std::string;

// Feature vectors are stored at embedding precision (f32); the dimension is
// the vector length.
using FeatureVector = std::vector<float>;

// One enrolled representation: a subject-labeled feature vector plus the
// media (image/frame) ids it was generated from.
struct Template {
  TemplateId id;
  SubjectId subject;
  FeatureVector features;
  std::vector<std::string> media_ids;
};

// Checks every Template invariant and returns the complete list of
// violations (empty means valid). Never throws, never mutates.
std::vector<std::string> validate_template(const Template& t);

// Labeled verification scores. `higher_is_better` distinguishes similarity
// scores (true) from distances (false); metrics accept both orientations.
struct ScoreSet {
  std::vector<double> genuine;
  std::vector<double> impostor;
  bool higher_is_better = true;
};

// Normalizes a ScoreSet to similarity orientation. Distances are negated
// (monotone and total, unlike a reciprocal), so every downstream metric is
// orientation-invariant by construction.
ScoreSet orient_scores(ScoreSet s);

// Dense probe x gallery score grid. Row-major. A gallery enrolls exactly one
// template per subject, so ranking semantics stay unambiguous; multi-template
// galleries must be fused first.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<TemplateId> probe_ids,
                   std::vector<SubjectId> probe_subjects,
                   std::vector<TemplateId> gallery_ids,
                   std::vector<SubjectId> gallery_subjects,
                   std::vector<double> scores);

  std::size_t rows() const noexcept { return probe_ids_.size(); }
  std::size_t cols() const noexcept { return gallery_ids_.size(); }

  double at(std::size_t row, std::size_t col) const {
    return scores_[row * cols() + col];
  }

  const std::vector<TemplateId>& probe_ids() const noexcept { return probe_ids_; }
  const std::vector<SubjectId>& probe_subjects() const noexcept { return probe_subjects_; }
  const std::vector<TemplateId>& gallery_ids() const noexcept { return gallery_ids_; }
  const std::vector<SubjectId>& gallery_subjects() const noexcept { return gallery_subjects_; }
  const std::vector<double>& scores() const noexcept { return scores_; }

 private:
  std::vector<TemplateId> probe_ids_;
  std::vector<SubjectId> probe_subjects_;
  std::vector<TemplateId> gallery_ids_;
  std::vector<SubjectId> gallery_subjects_;
  std::vector<double> scores_;  // row-major, rows() * cols()
};

enum class CurveKind { kRoc, kPr, kCmc, kIet };

const char* to_string(CurveKind kind);
CurveKind curve_kind_from_string(const std::string& name);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

// Ordered (x, y) list with axis semantics. Points are sorted by x,
// non-decreasing. ROC and CMC curves are non-decreasing in y, IET curves
// non-increasing; x and y live in [0, 1] except CMC x (integer ranks).
struct Curve {
  CurveKind kind = CurveKind::kRoc;
  std::vector<CurvePoint> points;
  std::string x_axis;
  std::string y_axis;
  std::uint32_t n_folds_aggregated = 0;
};

// Checks the Curve ordering/monotonicity/range invariants; returns
// violations, empty when valid.
std::vector<std::string> validate_curve(const Curve& c);

}  // namespace biomeval
