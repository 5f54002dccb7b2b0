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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biomeval/types.hpp"

namespace biomeval {

enum class SimilarityMeasure {
  kCosine,            // (a.b) / (|a||b|), in [-1, 1]
  kNegativeEuclidean, // -|a - b|_2, in (-inf, 0]
};

const char* to_string(SimilarityMeasure m);
SimilarityMeasure similarity_measure_from_string(const std::string& name);

// Scalar similarity between two same-dimension vectors, accumulated in
// double. Cosine on a zero-norm vector is an error, not a silent score.
double similarity(const FeatureVector& a, const FeatureVector& b,
                  SimilarityMeasure m);

// Full probe x gallery score matrix. Every cell is computed by the scalar
// similarity() routine, and workers own disjoint row blocks, so the grid is
// bitwise identical for any (batch, workers) configuration.
//
// batch: probe rows per work unit; workers: number of scoring threads.
SimilarityMatrix score_matrix(const std::vector<Template>& probes,
                              const std::vector<Template>& gallery,
                              SimilarityMeasure m, std::size_t batch = 64,
                              std::size_t workers = 1);

}  // namespace biomeval
