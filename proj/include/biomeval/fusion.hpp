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

// Set-based template fusion: collapse a set of per-media feature vectors
// into one template. Built-ins are mean and weighted mean; custom fusion
// functions register by name.

#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "biomeval/types.hpp"

namespace biomeval {

struct FusionMethod {
  enum class Kind { kMean, kWeightedMean, kCustom };

  Kind kind = Kind::kMean;
  std::string name;                            // set iff kCustom
  std::optional<std::vector<double>> weights;  // required iff kWeightedMean

  static FusionMethod mean() { return {}; }
  static FusionMethod weighted_mean(std::vector<double> weights);
  static FusionMethod custom(std::string name);
};

using FusionFn = std::function<FeatureVector(const std::vector<FeatureVector>&)>;

// Named registry of custom fusion functions. "mean" and "weighted_mean" are
// reserved for the built-ins and cannot be overridden.
class FusionRegistry {
 public:
  void register_fusion(const std::string& name, FusionFn fn);
  bool contains(const std::string& name) const;
  FeatureVector apply(const std::string& name,
                      const std::vector<FeatureVector>& vectors) const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, FusionFn> fns_;
};

// Process-wide registry used by fuse() for kCustom methods.
FusionRegistry& default_fusion_registry();

// Fuses a non-empty set of same-dimension vectors. Vectors are fused raw;
// normalization, if wanted, is the caller's job.
FeatureVector fuse(const std::vector<FeatureVector>& vectors,
                   const FusionMethod& method,
                   const FusionRegistry& registry = default_fusion_registry());

}  // namespace biomeval
