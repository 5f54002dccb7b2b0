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

#include "biomeval/fusion.hpp"

#include <algorithm>
#include <cmath>

namespace biomeval {

namespace {

bool is_reserved(const std::string& name) {
  return name == "mean" || name == "weighted_mean";
}

void require_same_dim(const std::vector<FeatureVector>& vectors) {
  if (vectors.empty()) raise(ErrorCode::kEmptySet, "no vectors to fuse");
  const std::size_t dim = vectors.front().size();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      raise(ErrorCode::kMixedDimensions,
            "vector " + std::to_string(i) + " has dim " +
                std::to_string(vectors[i].size()) + ", expected " +
                std::to_string(dim));
    }
  }
}

FeatureVector fuse_mean(const std::vector<FeatureVector>& vectors) {
  const std::size_t dim = vectors.front().size();
  const std::size_t count = vectors.size();
  FeatureVector out(dim);
  std::vector<double> column(count);
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t i = 0; i < count; ++i) {
      column[i] = vectors[i][d];
    }
    // Summing in sorted order makes the mean exactly permutation-invariant.
    std::sort(column.begin(), column.end());
    double sum = 0.0;
    for (double v : column) sum += v;
    out[d] = static_cast<float>(sum / static_cast<double>(count));
  }
  return out;
}

FeatureVector fuse_weighted(const std::vector<FeatureVector>& vectors,
                            const std::optional<std::vector<double>>& weights) {
  if (!weights) {
    raise(ErrorCode::kBadWeights, "weighted_mean requires weights");
  }
  if (weights->size() != vectors.size()) {
    raise(ErrorCode::kBadWeights,
          "got " + std::to_string(weights->size()) + " weights for " +
              std::to_string(vectors.size()) + " vectors");
  }
  double weight_sum = 0.0;
  for (double w : *weights) {
    if (!std::isfinite(w) || w < 0.0) {
      raise(ErrorCode::kBadWeights, "weights must be finite and non-negative");
    }
    weight_sum += w;
  }
  if (weight_sum <= 0.0) {
    raise(ErrorCode::kBadWeights, "weights sum to zero");
  }
  const std::size_t dim = vectors.front().size();
  FeatureVector out(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    double sum = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      sum += (*weights)[i] * static_cast<double>(vectors[i][d]);
    }
    out[d] = static_cast<float>(sum / weight_sum);
  }
  return out;
}

}  // namespace

FusionMethod FusionMethod::weighted_mean(std::vector<double> weights) {
  FusionMethod m;
  m.kind = Kind::kWeightedMean;
  m.weights = std::move(weights);
  return m;
}

FusionMethod FusionMethod::custom(std::string name) {
  FusionMethod m;
  m.kind = Kind::kCustom;
  m.name = std::move(name);
  return m;
}

void FusionRegistry::register_fusion(const std::string& name, FusionFn fn) {
  if (is_reserved(name)) {
    raise(ErrorCode::kReservedName, "'" + name + "' names a built-in fusion");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (!fns_.emplace(name, std::move(fn)).second) {
    raise(ErrorCode::kDuplicateName, "fusion '" + name + "' already registered");
  }
}

bool FusionRegistry::contains(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return fns_.count(name) != 0;
}

FeatureVector FusionRegistry::apply(
    const std::string& name, const std::vector<FeatureVector>& vectors) const {
  FusionFn fn;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = fns_.find(name);
    if (it == fns_.end()) {
      raise(ErrorCode::kUnknownFusion, "no fusion registered as '" + name + "'");
    }
    fn = it->second;
  }
  return fn(vectors);
}

FusionRegistry& default_fusion_registry() {
  static FusionRegistry registry;
  return registry;
}

FeatureVector fuse(const std::vector<FeatureVector>& vectors,
                   const FusionMethod& method, const FusionRegistry& registry) {
  require_same_dim(vectors);
  switch (method.kind) {
    case FusionMethod::Kind::kMean:
      return fuse_mean(vectors);
    case FusionMethod::Kind::kWeightedMean:
      return fuse_weighted(vectors, method.weights);
    case FusionMethod::Kind::kCustom: {
      FeatureVector out = registry.apply(method.name, vectors);
      if (out.size() != vectors.front().size()) {
        raise(ErrorCode::kInvalidArgument,
              "custom fusion '" + method.name + "' changed the dimension");
      }
      return out;
    }
  }
  raise(ErrorCode::kInvalidArgument, "unknown fusion kind");
}

}  // namespace biomeval
