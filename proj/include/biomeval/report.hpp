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

// Evaluation reports: a single JSON document with a stable key order so
// diffs between runs are meaningful. The configuration echo records every
// convention needed to rerun the evaluation.

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace biomeval {

struct ReportConfig {
  std::string measure;
  std::string fusion;
  std::string tie_policy;
  std::string fnir_convention;
  std::string calibration;
  std::size_t workers = 1;
};

struct EvaluationReport {
  std::string tool_version;
  std::string protocol;
  ReportConfig config;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  std::vector<std::string> curve_files;
  std::vector<std::string> notes;
};

// JSON cannot carry infinities; score thresholds may be the +inf sweep
// sentinel, so they pass through this before entering a report.
nlohmann::ordered_json json_number(double v);

nlohmann::ordered_json to_json(const EvaluationReport& r);
void write_report(const EvaluationReport& r, const std::string& path);

}  // namespace biomeval
