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

#include "biomeval/types.hpp"

#include <cctype>
#include <cmath>
#include <unordered_set>

namespace biomeval {

namespace {

bool has_edge_whitespace(const std::string& s) {
  if (s.empty()) return false;
  return std::isspace(static_cast<unsigned char>(s.front())) ||
         std::isspace(static_cast<unsigned char>(s.back()));
}

}  // namespace

std::vector<std::string> validate_template(const Template& t) {
  std::vector<std::string> violations;
  if (t.id.empty()) {
    violations.push_back("template id must be non-empty");
  } else if (has_edge_whitespace(t.id)) {
    violations.push_back("template id has leading or trailing whitespace");
  }
  if (t.subject.empty()) {
    violations.push_back("subject id must be non-empty");
  } else if (has_edge_whitespace(t.subject)) {
    violations.push_back("subject id has leading or trailing whitespace");
  }
  if (t.features.empty()) {
    violations.push_back("dim must be >= 1");
  }
  for (std::size_t i = 0; i < t.features.size(); ++i) {
    if (!std::isfinite(t.features[i])) {
      violations.push_back("non-finite component at index " + std::to_string(i));
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& media : t.media_ids) {
    if (!seen.insert(media).second) {
      violations.push_back("duplicate media id: " + media);
    }
  }
  return violations;
}

ScoreSet orient_scores(ScoreSet s) {
  if (s.higher_is_better) return s;
  for (double& v : s.genuine) v = -v;
  for (double& v : s.impostor) v = -v;
  s.higher_is_better = true;
  return s;
}

SimilarityMatrix::SimilarityMatrix(std::vector<TemplateId> probe_ids,
                                   std::vector<SubjectId> probe_subjects,
                                   std::vector<TemplateId> gallery_ids,
                                   std::vector<SubjectId> gallery_subjects,
                                   std::vector<double> scores)
    : probe_ids_(std::move(probe_ids)),
      probe_subjects_(std::move(probe_subjects)),
      gallery_ids_(std::move(gallery_ids)),
      gallery_subjects_(std::move(gallery_subjects)),
      scores_(std::move(scores)) {
  if (probe_ids_.size() != probe_subjects_.size()) {
    raise(ErrorCode::kInvalidArgument, "probe id/subject count mismatch");
  }
  if (gallery_ids_.size() != gallery_subjects_.size()) {
    raise(ErrorCode::kInvalidArgument, "gallery id/subject count mismatch");
  }
  if (scores_.size() != probe_ids_.size() * gallery_ids_.size()) {
    raise(ErrorCode::kInvalidArgument,
          "score grid size does not equal |probes| x |gallery|");
  }
  std::unordered_set<SubjectId> subjects;
  for (const auto& subject : gallery_subjects_) {
    if (!subjects.insert(subject).second) {
      raise(ErrorCode::kDuplicateSubject,
            "gallery enrolls subject '" + subject + "' more than once");
    }
  }
  for (double v : scores_) {
    if (!std::isfinite(v)) {
      raise(ErrorCode::kInvalidArgument, "non-finite similarity score");
    }
  }
}

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kRoc: return "ROC";
    case CurveKind::kPr:  return "PR";
    case CurveKind::kCmc: return "CMC";
    case CurveKind::kIet: return "IET";
  }
  return "?";
}

CurveKind curve_kind_from_string(const std::string& name) {
  if (name == "ROC") return CurveKind::kRoc;
  if (name == "PR") return CurveKind::kPr;
  if (name == "CMC") return CurveKind::kCmc;
  if (name == "IET") return CurveKind::kIet;
  raise(ErrorCode::kBadValue, "unknown curve kind '" + name + "'");
}

std::vector<std::string> validate_curve(const Curve& c) {
  std::vector<std::string> violations;
  const auto& pts = c.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i].x < pts[i - 1].x) {
      violations.push_back("x decreases at point " + std::to_string(i));
    }
    if (c.kind == CurveKind::kCmc) {
      double rank = pts[i].x;
      if (rank < 1.0 || rank != std::floor(rank)) {
        violations.push_back("CMC rank not a positive integer at point " +
                             std::to_string(i));
      }
    } else if (pts[i].x < 0.0 || pts[i].x > 1.0) {
      violations.push_back("x out of [0,1] at point " + std::to_string(i));
    }
    if (pts[i].y < 0.0 || pts[i].y > 1.0) {
      violations.push_back("y out of [0,1] at point " + std::to_string(i));
    }
    if (i > 0 && pts[i].x >= pts[i - 1].x) {
      bool bad_roc_cmc = (c.kind == CurveKind::kRoc || c.kind == CurveKind::kCmc) &&
                         pts[i].y < pts[i - 1].y;
      bool bad_iet = c.kind == CurveKind::kIet && pts[i].y > pts[i - 1].y;
      if (bad_roc_cmc) {
        violations.push_back("y decreases at point " + std::to_string(i));
      }
      if (bad_iet) {
        violations.push_back("y increases at point " + std::to_string(i));
      }
    }
  }
  return violations;
}

}  // namespace biomeval
