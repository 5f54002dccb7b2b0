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

#include "biomeval/similarity.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace biomeval {

const char* to_string(SimilarityMeasure m) {
  switch (m) {
    case SimilarityMeasure::kCosine: return "cosine";
    case SimilarityMeasure::kNegativeEuclidean: return "neg-euclidean";
  }
  return "?";
}

SimilarityMeasure similarity_measure_from_string(const std::string& name) {
  if (name == "cosine") return SimilarityMeasure::kCosine;
  if (name == "neg-euclidean" || name == "negative_euclidean") {
    return SimilarityMeasure::kNegativeEuclidean;
  }
  raise(ErrorCode::kBadValue, "unknown similarity measure '" + name + "'");
}

double similarity(const FeatureVector& a, const FeatureVector& b,
                  SimilarityMeasure m) {
  if (a.size() != b.size()) {
    raise(ErrorCode::kMixedDimensions,
          "dim " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  switch (m) {
    case SimilarityMeasure::kCosine: {
      double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = a[i], y = b[i];
        dot += x * y;
        norm_a += x * x;
        norm_b += y * y;
      }
      if (norm_a == 0.0 || norm_b == 0.0) {
        raise(ErrorCode::kZeroNorm, "cosine undefined for a zero-norm vector");
      }
      return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
    }
    case SimilarityMeasure::kNegativeEuclidean: {
      double sum = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        sum += d * d;
      }
      return -std::sqrt(sum);
    }
  }
  raise(ErrorCode::kInvalidArgument, "unknown similarity measure");
}

namespace {

void require_uniform_dim(const std::vector<Template>& probes,
                         const std::vector<Template>& gallery) {
  std::size_t dim = 0;
  bool have_dim = false;
  auto check = [&](const Template& t, const char* role, std::size_t index) {
    if (!have_dim) {
      dim = t.features.size();
      have_dim = true;
      return;
    }
    if (t.features.size() != dim) {
      raise(ErrorCode::kMixedDimensions,
            std::string(role) + " template '" + t.id + "' (index " +
                std::to_string(index) + ") has dim " +
                std::to_string(t.features.size()) + ", expected " +
                std::to_string(dim));
    }
  };
  for (std::size_t i = 0; i < probes.size(); ++i) check(probes[i], "probe", i);
  for (std::size_t i = 0; i < gallery.size(); ++i) check(gallery[i], "gallery", i);
}

}  // namespace

SimilarityMatrix score_matrix(const std::vector<Template>& probes,
                              const std::vector<Template>& gallery,
                              SimilarityMeasure m, std::size_t batch,
                              std::size_t workers) {
  if (batch < 1) raise(ErrorCode::kInvalidArgument, "batch must be >= 1");
  if (workers < 1) raise(ErrorCode::kInvalidArgument, "workers must be >= 1");
  require_uniform_dim(probes, gallery);

  const std::size_t rows = probes.size();
  const std::size_t cols = gallery.size();
  std::vector<double> scores(rows * cols);

  // Row blocks are claimed through an atomic cursor; each block's cells are
  // written only by its owner, so the result does not depend on scheduling.
  const std::size_t n_blocks = batch > 0 ? (rows + batch - 1) / batch : 0;
  std::atomic<std::size_t> next_block{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto score_rows = [&]() {
    for (;;) {
      const std::size_t block = next_block.fetch_add(1);
      if (block >= n_blocks) break;
      const std::size_t row_begin = block * batch;
      const std::size_t row_end = std::min(rows, row_begin + batch);
      std::size_t i = row_begin, j = 0;
      try {
        for (i = row_begin; i < row_end; ++i) {
          for (j = 0; j < cols; ++j) {
            scores[i * cols + j] =
                similarity(probes[i].features, gallery[j].features, m);
          }
        }
      } catch (const EvalError& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::make_exception_ptr(EvalError(
              e.code(), e.message() + " (probe '" + probes[i].id + "' row " +
                            std::to_string(i) + ", gallery '" + gallery[j].id +
                            "' col " + std::to_string(j) + ")"));
        }
        return;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1 || n_blocks <= 1) {
    score_rows();
  } else {
    std::vector<std::thread> pool;
    const std::size_t n_threads = std::min(workers, n_blocks);
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(score_rows);
    for (auto& thread : pool) thread.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<TemplateId> probe_ids, gallery_ids;
  std::vector<SubjectId> probe_subjects, gallery_subjects;
  probe_ids.reserve(rows);
  probe_subjects.reserve(rows);
  for (const auto& t : probes) {
    probe_ids.push_back(t.id);
    probe_subjects.push_back(t.subject);
  }
  gallery_ids.reserve(cols);
  gallery_subjects.reserve(cols);
  for (const auto& t : gallery) {
    gallery_ids.push_back(t.id);
    gallery_subjects.push_back(t.subject);
  }
  return SimilarityMatrix(std::move(probe_ids), std::move(probe_subjects),
                          std::move(gallery_ids), std::move(gallery_subjects),
                          std::move(scores));
}

}  // namespace biomeval
