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

#include "biomeval/report.hpp"

#include <cmath>
#include <fstream>

#include "biomeval/error.hpp"

namespace biomeval {

nlohmann::ordered_json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

nlohmann::ordered_json to_json(const EvaluationReport& r) {
  nlohmann::ordered_json j;
  j["tool_version"] = r.tool_version;
  j["protocol"] = r.protocol;
  nlohmann::ordered_json config;
  config["measure"] = r.config.measure;
  config["fusion"] = r.config.fusion;
  config["tie_policy"] = r.config.tie_policy;
  config["fnir_convention"] = r.config.fnir_convention;
  config["calibration"] = r.config.calibration;
  config["workers"] = r.config.workers;
  j["config"] = std::move(config);
  j["metrics"] = r.metrics;
  j["curve_files"] = r.curve_files;
  j["notes"] = r.notes;
  return j;
}

void write_report(const EvaluationReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorCode::kIoFailure, "cannot open '" + path + "' for writing");
  }
  out << to_json(r).dump(2) << "\n";
  out.flush();
  if (!out) {
    raise(ErrorCode::kIoFailure, "write failure on '" + path + "'");
  }
}

}  // namespace biomeval
