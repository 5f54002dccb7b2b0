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

// Synthetic score sets and populations with analytically known behavior.
// Everything is drawn from the counter-based generator in rng.hpp, so a
// given spec and seed reproduces bit-identical output on any platform. The
// draw order is part of the contract and documented per operation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "biomeval/io.hpp"
#include "biomeval/protocols.hpp"
#include "biomeval/types.hpp"

namespace biomeval {

struct GaussianScoreModel {
  double genuine_mean = 0.6;
  double genuine_sd = 0.1;
  double impostor_mean = 0.4;
  double impostor_sd = 0.1;
  std::size_t n_genuine = 1000;
  std::size_t n_impostor = 1000;
  std::uint64_t seed = 0;
};

// Draws genuine ~ N(genuine_mean, genuine_sd^2) then impostor ~
// N(impostor_mean, impostor_sd^2), in that order, from stream 0 of the
// seed. Scores are oriented higher-is-better.
ScoreSet sample_scores(const GaussianScoreModel& m);

struct SyntheticPopulation {
  std::size_t n_subjects = 50;
  std::size_t n_probe_mated = 100;
  std::size_t n_probe_nonmated = 20;  // 0 disables non-mated probes
  std::size_t dim = 16;
  double within_class_sd = 0.1;
  double between_class_sd = 1.0;
  std::uint64_t seed = 0;
};

struct SyntheticData {
  // One template per subject, id "g_<subject>", subjects "S0000"...
  std::vector<Template> gallery;
  // Mated probes first (ids "p0000"..., subjects round-robin over the
  // enrolled subjects), then non-mated probes (ids "q0000"..., disjoint
  // subjects "U0000"...).
  std::vector<Template> probes;
};

// Streams by purpose: 0 enrolled-subject centroids, 1 gallery template
// noise, 2 mated probe noise, 3 non-mated centroids, 4 non-mated probe
// noise. Within a stream, draws run subject- or probe-major, component-
// minor. template = centroid + N(0, within_class_sd^2 I) per component.
SyntheticData sample_population(const SyntheticPopulation& p);

struct SyntheticMediaData {
  // media_per_subject templates per enrolled subject, ids
  // "m_<subject>_<k>"; fusing each subject's group reproduces a gallery.
  std::vector<Template> media;
  std::vector<MediaMapRecord> media_map;  // groups media under "g_<subject>"
  std::vector<Template> probes;
};

// Same streams as sample_population with stream 1 providing media noise
// (subject-major, media-minor, component-least).
SyntheticMediaData sample_media_population(const SyntheticPopulation& p,
                                           std::size_t media_per_subject);

// Verification pairs over a synthetic population: every mated probe is
// paired with its own gallery template (genuine) and the next enrolled
// subject's template (impostor). Folds are assigned round-robin.
std::vector<ComparisonPair> make_verification_pairs(const SyntheticData& d,
                                                    std::size_t n_folds);

struct SyntheticPairData {
  std::vector<Template> templates;
  std::vector<ComparisonPair> pairs;
};

// Materializes a Gaussian score model as 2-D unit-vector pairs whose cosine
// similarity equals the drawn score (clamped to [-1, 1], float precision).
// Scores come from sample_scores(m); pair orientations are uniform angles
// from stream 1, genuine pairs first. Genuine pairs share a subject,
// impostor pairs use two distinct ones. Folds are assigned round-robin per
// class.
SyntheticPairData realize_score_pairs(const GaussianScoreModel& m,
                                      std::size_t n_folds);

}  // namespace biomeval
