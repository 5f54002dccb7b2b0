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

// File formats: the FTPL binary template container, CSV template
// interchange, protocol manifests, and curve CSVs. All multi-byte integers
// on disk are little-endian regardless of host; parsers fail loudly with
// line/column or byte-offset context and never partially succeed.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "biomeval/protocols.hpp"
#include "biomeval/types.hpp"

namespace biomeval {

// FTPL layout: magic "FTPL", version u16 (=1), dim u32, count u64, then per
// record [id_len u16][id][subject_len u16][subject][dim x f32]. Media ids
// are not persisted. Returns the number of bytes written.
std::size_t write_templates(const std::vector<Template>& templates,
                            const std::string& path);
std::vector<Template> read_templates(const std::string& path);

// CSV interchange with header "template_id,subject_id,f0,...,f{d-1}".
void write_templates_csv(const std::vector<Template>& templates,
                         const std::string& path);
std::vector<Template> read_templates_csv(const std::string& path);

struct GalleryRecord {
  std::string gallery_set;
  TemplateId template_id;
  SubjectId subject_id;
};

struct ProbeRecord {
  TemplateId template_id;
  SubjectId subject_id;
};

struct MediaMapRecord {
  TemplateId media_template_id;
  SubjectId subject_id;
  TemplateId fused_template_id;
  std::optional<double> weight;
};

// Manifest readers. Each validates its fixed header and per-field values;
// referential integrity against a template store is the caller's link step.
// Headers:
//   pairs      fold,template_a,template_b,same
//   gallery    gallery_set,template_id,subject_id
//   probe      template_id,subject_id
//   media_map  media_template_id,subject_id,fused_template_id[,weight]
std::vector<ComparisonPair> read_pairs_manifest(const std::string& path);
std::vector<GalleryRecord> read_gallery_manifest(const std::string& path);
std::vector<ProbeRecord> read_probe_manifest(const std::string& path);
std::vector<MediaMapRecord> read_media_map_manifest(const std::string& path);

void write_pairs_manifest(const std::vector<ComparisonPair>& pairs,
                          const std::string& path);
void write_gallery_manifest(const std::vector<GalleryRecord>& records,
                            const std::string& path);
void write_probe_manifest(const std::vector<ProbeRecord>& records,
                          const std::string& path);
void write_media_map_manifest(const std::vector<MediaMapRecord>& records,
                              const std::string& path);

// Curve CSV: one '#' comment line naming kind, axes and fold count, then an
// "x,y" header, then points with 9 significant digits.
void write_curve_csv(const Curve& c, const std::string& path);
Curve read_curve_csv(const std::string& path);

}  // namespace biomeval
