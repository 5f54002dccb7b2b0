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

#include "biomeval/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "biomeval/error.hpp"
#include "biomeval/rng.hpp"

namespace biomeval {
namespace {

std::string numbered(const char* prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%04zu", prefix, i);
  return buf;
}

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    raise(ErrorCode::kInvalidArgument,
          std::string(name) + " must be strictly positive");
  }
}

void check_model(const GaussianScoreModel& m) {
  check_positive(m.genuine_sd, "genuine_sd");
  check_positive(m.impostor_sd, "impostor_sd");
  if (m.n_genuine == 0 || m.n_impostor == 0) {
    raise(ErrorCode::kInvalidArgument, "score counts must be >= 1");
  }
}

void check_population(const SyntheticPopulation& p) {
  if (p.n_subjects == 0 || p.n_probe_mated == 0 || p.dim == 0) {
    raise(ErrorCode::kInvalidArgument,
          "n_subjects, n_probe_mated and dim must be >= 1");
  }
  check_positive(p.within_class_sd, "within_class_sd");
  check_positive(p.between_class_sd, "between_class_sd");
}

std::vector<FeatureVector> draw_centroids(std::size_t n, std::size_t dim,
                                          double sd, Philox4x32& rng) {
  std::vector<FeatureVector> out(n);
  for (auto& c : out) {
    c.resize(dim);
    for (auto& v : c) v = static_cast<float>(sd * rng.next_gaussian());
  }
  return out;
}

FeatureVector noisy_copy(const FeatureVector& centroid, double sd,
                         Philox4x32& rng) {
  FeatureVector v(centroid.size());
  for (std::size_t d = 0; d < centroid.size(); ++d) {
    v[d] = static_cast<float>(centroid[d] + sd * rng.next_gaussian());
  }
  return v;
}

}  // namespace

ScoreSet sample_scores(const GaussianScoreModel& m) {
  check_model(m);
  Philox4x32 rng(m.seed, 0);
  ScoreSet s;
  s.genuine.reserve(m.n_genuine);
  s.impostor.reserve(m.n_impostor);
  for (std::size_t i = 0; i < m.n_genuine; ++i) {
    s.genuine.push_back(m.genuine_mean + m.genuine_sd * rng.next_gaussian());
  }
  for (std::size_t i = 0; i < m.n_impostor; ++i) {
    s.impostor.push_back(m.impostor_mean +
                         m.impostor_sd * rng.next_gaussian());
  }
  return s;
}

SyntheticData sample_population(const SyntheticPopulation& p) {
  check_population(p);
  Philox4x32 centroid_rng(p.seed, 0);
  Philox4x32 gallery_rng(p.seed, 1);
  Philox4x32 mated_rng(p.seed, 2);
  Philox4x32 nonmated_centroid_rng(p.seed, 3);
  Philox4x32 nonmated_rng(p.seed, 4);

  const auto centroids =
      draw_centroids(p.n_subjects, p.dim, p.between_class_sd, centroid_rng);

  SyntheticData out;
  out.gallery.reserve(p.n_subjects);
  for (std::size_t i = 0; i < p.n_subjects; ++i) {
    Template t;
    t.subject = numbered("S", i);
    t.id = "g_" + t.subject;
    t.features = noisy_copy(centroids[i], p.within_class_sd, gallery_rng);
    out.gallery.push_back(std::move(t));
  }

  out.probes.reserve(p.n_probe_mated + p.n_probe_nonmated);
  for (std::size_t i = 0; i < p.n_probe_mated; ++i) {
    Template t;
    t.id = numbered("p", i);
    t.subject = numbered("S", i % p.n_subjects);
    t.features =
        noisy_copy(centroids[i % p.n_subjects], p.within_class_sd, mated_rng);
    out.probes.push_back(std::move(t));
  }

  const auto stray_centroids = draw_centroids(
      p.n_probe_nonmated, p.dim, p.between_class_sd, nonmated_centroid_rng);
  for (std::size_t i = 0; i < p.n_probe_nonmated; ++i) {
    Template t;
    t.id = numbered("q", i);
    t.subject = numbered("U", i);
    t.features =
        noisy_copy(stray_centroids[i], p.within_class_sd, nonmated_rng);
    out.probes.push_back(std::move(t));
  }
  return out;
}

SyntheticMediaData sample_media_population(const SyntheticPopulation& p,
                                           std::size_t media_per_subject) {
  check_population(p);
  if (media_per_subject == 0) {
    raise(ErrorCode::kInvalidArgument, "media_per_subject must be >= 1");
  }
  Philox4x32 centroid_rng(p.seed, 0);
  Philox4x32 media_rng(p.seed, 1);
  Philox4x32 mated_rng(p.seed, 2);
  Philox4x32 nonmated_centroid_rng(p.seed, 3);
  Philox4x32 nonmated_rng(p.seed, 4);

  const auto centroids =
      draw_centroids(p.n_subjects, p.dim, p.between_class_sd, centroid_rng);

  SyntheticMediaData out;
  out.media.reserve(p.n_subjects * media_per_subject);
  for (std::size_t i = 0; i < p.n_subjects; ++i) {
    const std::string subject = numbered("S", i);
    for (std::size_t k = 0; k < media_per_subject; ++k) {
      Template t;
      t.subject = subject;
      t.id = "m_" + subject + "_" + std::to_string(k);
      t.features = noisy_copy(centroids[i], p.within_class_sd, media_rng);
      out.media_map.push_back({t.id, subject, "g_" + subject, std::nullopt});
      out.media.push_back(std::move(t));
    }
  }

  for (std::size_t i = 0; i < p.n_probe_mated; ++i) {
    Template t;
    t.id = numbered("p", i);
    t.subject = numbered("S", i % p.n_subjects);
    t.features =
        noisy_copy(centroids[i % p.n_subjects], p.within_class_sd, mated_rng);
    out.probes.push_back(std::move(t));
  }
  const auto stray_centroids = draw_centroids(
      p.n_probe_nonmated, p.dim, p.between_class_sd, nonmated_centroid_rng);
  for (std::size_t i = 0; i < p.n_probe_nonmated; ++i) {
    Template t;
    t.id = numbered("q", i);
    t.subject = numbered("U", i);
    t.features =
        noisy_copy(stray_centroids[i], p.within_class_sd, nonmated_rng);
    out.probes.push_back(std::move(t));
  }
  return out;
}

std::vector<ComparisonPair> make_verification_pairs(const SyntheticData& d,
                                                    std::size_t n_folds) {
  if (n_folds == 0) {
    raise(ErrorCode::kInvalidArgument, "n_folds must be >= 1");
  }
  if (d.gallery.size() < 2) {
    raise(ErrorCode::kInvalidArgument,
          "impostor pairs need at least 2 gallery subjects");
  }
  std::map<SubjectId, std::size_t> by_subject;
  for (std::size_t i = 0; i < d.gallery.size(); ++i) {
    by_subject[d.gallery[i].subject] = i;
  }

  std::vector<ComparisonPair> pairs;
  std::size_t mated_seen = 0;
  for (const Template& probe : d.probes) {
    auto it = by_subject.find(probe.subject);
    if (it == by_subject.end()) continue;  // non-mated probes take no part
    const std::uint32_t fold =
        static_cast<std::uint32_t>(mated_seen % n_folds);
    const std::size_t own = it->second;
    const std::size_t other = (own + 1) % d.gallery.size();
    pairs.push_back({d.gallery[own].id, probe.id, true, fold});
    pairs.push_back({d.gallery[other].id, probe.id, false, fold});
    ++mated_seen;
  }
  if (mated_seen < n_folds) {
    raise(ErrorCode::kInvalidArgument,
          "n_folds " + std::to_string(n_folds) + " exceeds the " +
              std::to_string(mated_seen) + " mated probes");
  }
  return pairs;
}

SyntheticPairData realize_score_pairs(const GaussianScoreModel& m,
                                      std::size_t n_folds) {
  check_model(m);
  if (n_folds == 0) {
    raise(ErrorCode::kInvalidArgument, "n_folds must be >= 1");
  }
  if (n_folds > m.n_genuine || n_folds > m.n_impostor) {
    raise(ErrorCode::kInvalidArgument,
          "n_folds exceeds the per-class score count");
  }

  const ScoreSet scores = sample_scores(m);
  Philox4x32 angle_rng(m.seed, 1);
  const double two_pi = 2.0 * std::acos(-1.0);

  SyntheticPairData out;
  auto add_pair = [&](double score, bool same, std::size_t i,
                      std::uint32_t fold) {
    const double clamped = std::clamp(score, -1.0, 1.0);
    const double phi = two_pi * angle_rng.next_double();
    const double theta = std::acos(clamped);
    Template a, b;
    a.id = numbered(same ? "ga" : "xa", i);
    b.id = numbered(same ? "gb" : "xb", i);
    if (same) {
      a.subject = b.subject = numbered("S", i);
    } else {
      a.subject = numbered("Xa", i);
      b.subject = numbered("Xb", i);
    }
    a.features = {static_cast<float>(std::cos(phi)),
                  static_cast<float>(std::sin(phi))};
    b.features = {static_cast<float>(std::cos(phi + theta)),
                  static_cast<float>(std::sin(phi + theta))};
    out.pairs.push_back({a.id, b.id, same, fold});
    out.templates.push_back(std::move(a));
    out.templates.push_back(std::move(b));
  };

  for (std::size_t i = 0; i < scores.genuine.size(); ++i) {
    add_pair(scores.genuine[i], true, i,
             static_cast<std::uint32_t>(i % n_folds));
  }
  for (std::size_t i = 0; i < scores.impostor.size(); ++i) {
    add_pair(scores.impostor[i], false, i,
             static_cast<std::uint32_t>(i % n_folds));
  }
  return out;
}

}  // namespace biomeval
