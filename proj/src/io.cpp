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

#include "biomeval/io.hpp"

#include <bit>
#include <cerrno>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "biomeval/error.hpp"

namespace biomeval {
namespace {

constexpr char kMagic[4] = {'F', 'T', 'P', 'L'};
constexpr std::uint16_t kFormatVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
}

void put_f32(std::string& out, float v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

// Byte-offset tracking reader over an in-memory file image.
class Cursor {
 public:
  explicit Cursor(const std::string& data) : data_(data) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

  const char* take(std::size_t n, const char* what) {
    if (remaining() < n) {
      std::ostringstream msg;
      msg << "truncated at byte offset " << pos_ << ": need " << n
          << " bytes for " << what << ", have " << remaining();
      raise(ErrorCode::kTruncatedFile, msg.str());
    }
    const char* p = data_.data() + pos_;
    pos_ += n;
    return p;
  }

  std::uint16_t u16(const char* what) {
    const unsigned char* p =
        reinterpret_cast<const unsigned char*>(take(2, what));
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
  }

  std::uint32_t u32(const char* what) {
    const unsigned char* p =
        reinterpret_cast<const unsigned char*>(take(4, what));
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
  }

  std::uint64_t u64(const char* what) {
    const unsigned char* p =
        reinterpret_cast<const unsigned char*>(take(8, what));
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
  }

  float f32(const char* what) { return std::bit_cast<float>(u32(what)); }

 private:
  const std::string& data_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorCode::kIoFailure, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    raise(ErrorCode::kIoFailure, "read failure on '" + path + "'");
  }
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorCode::kIoFailure, "cannot open '" + path + "' for writing");
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) {
    raise(ErrorCode::kIoFailure, "write failure on '" + path + "'");
  }
}

void check_valid_for_write(const Template& t, std::size_t index) {
  auto problems = validate_template(t);
  if (!problems.empty()) {
    raise(ErrorCode::kInvalidArgument,
          "template " + std::to_string(index) + " ('" + t.id +
              "'): " + problems.front());
  }
  const std::size_t max_len = std::numeric_limits<std::uint16_t>::max();
  if (t.id.size() > max_len || t.subject.size() > max_len) {
    raise(ErrorCode::kInvalidArgument,
          "template " + std::to_string(index) + ": id or subject exceeds " +
              std::to_string(max_len) + " bytes");
  }
}

std::string format_float(float v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>(v));
  return buf;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Splits one line on commas; no quoting, a trailing '\r' is dropped.
std::vector<std::string> split_fields(const std::string& line) {
  std::string s = line;
  if (!s.empty() && s.back() == '\r') s.pop_back();
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(s.substr(start));
      break;
    }
    fields.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

// File image as 1-based lines; a trailing newline does not create a line.
std::vector<std::string> split_lines(const std::string& data) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= data.size()) {
    const std::size_t nl = data.find('\n', start);
    if (nl == std::string::npos) {
      if (start < data.size()) lines.push_back(data.substr(start));
      break;
    }
    lines.push_back(data.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

[[noreturn]] void bad_value(std::size_t line, std::size_t col,
                            const std::string& reason) {
  raise(ErrorCode::kBadValue, "line " + std::to_string(line) + ", column " +
                                  std::to_string(col) + ": " + reason);
}

double parse_real(const std::string& field, std::size_t line,
                  std::size_t col) {
  if (field.empty()) bad_value(line, col, "empty field");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || errno == ERANGE) {
    raise(ErrorCode::kNonNumeric, "line " + std::to_string(line) +
                                      ", column " + std::to_string(col) +
                                      ": '" + field + "' is not a number");
  }
  return v;
}

float parse_real32(const std::string& field, std::size_t line,
                   std::size_t col) {
  if (field.empty()) {
    raise(ErrorCode::kNonNumeric, "line " + std::to_string(line) +
                                      ", column " + std::to_string(col) +
                                      ": empty field is not a number");
  }
  errno = 0;
  char* end = nullptr;
  const float v = std::strtof(field.c_str(), &end);
  if (end != field.c_str() + field.size()) {
    raise(ErrorCode::kNonNumeric, "line " + std::to_string(line) +
                                      ", column " + std::to_string(col) +
                                      ": '" + field + "' is not a number");
  }
  return v;
}

std::uint32_t parse_fold(const std::string& field, std::size_t line,
                         std::size_t col) {
  if (field.empty() || field.find_first_not_of("0123456789") !=
                           std::string::npos) {
    bad_value(line, col, "must be a non-negative integer");
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(field.c_str(), &end, 10);
  if (errno == ERANGE || v > std::numeric_limits<std::uint32_t>::max()) {
    bad_value(line, col, "fold index out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::string require_nonempty(const std::string& field, std::size_t line,
                             std::size_t col) {
  if (field.empty()) bad_value(line, col, "must be non-empty");
  return field;
}

struct ManifestReader {
  std::vector<std::string> lines;
  std::string expected_header;

  // Returns data rows with their 1-based line numbers, after checking the
  // header and field counts (min_fields..max_fields).
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows(
      std::size_t min_fields, std::size_t max_fields) const {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto fields = split_fields(lines[i]);
      if (fields.size() < min_fields || fields.size() > max_fields) {
        raise(ErrorCode::kRaggedRow,
              "line " + std::to_string(i + 1) + ": expected " +
                  (min_fields == max_fields
                       ? std::to_string(min_fields)
                       : std::to_string(min_fields) + ".." +
                             std::to_string(max_fields)) +
                  " fields, got " + std::to_string(fields.size()));
      }
      out.emplace_back(i + 1, std::move(fields));
    }
    return out;
  }
};

ManifestReader open_manifest(const std::string& path,
                             const std::string& header) {
  const std::string data = read_file(path);
  if (data.empty()) {
    raise(ErrorCode::kEmptyFile, "'" + path + "' is empty");
  }
  ManifestReader r{split_lines(data), header};
  std::string first = r.lines.empty() ? "" : r.lines[0];
  if (!first.empty() && first.back() == '\r') first.pop_back();
  if (first != header) {
    raise(ErrorCode::kSchemaMismatch,
          "'" + path + "': expected header '" + header + "', got '" + first +
              "'");
  }
  return r;
}

}  // namespace

std::size_t write_templates(const std::vector<Template>& templates,
                            const std::string& path) {
  if (templates.empty()) {
    raise(ErrorCode::kEmptyInput, "cannot write an empty template list");
  }
  const std::size_t dim = templates.front().features.size();
  std::string out;
  out.append(kMagic, 4);
  put_u16(out, kFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(dim));
  put_u64(out, templates.size());

  for (std::size_t i = 0; i < templates.size(); ++i) {
    const Template& t = templates[i];
    check_valid_for_write(t, i);
    if (t.features.size() != dim) {
      raise(ErrorCode::kDimMismatch,
            "template " + std::to_string(i) + " ('" + t.id + "') has dim " +
                std::to_string(t.features.size()) + ", expected " +
                std::to_string(dim));
    }
    put_u16(out, static_cast<std::uint16_t>(t.id.size()));
    out.append(t.id);
    put_u16(out, static_cast<std::uint16_t>(t.subject.size()));
    out.append(t.subject);
    for (float f : t.features) put_f32(out, f);
  }
  write_file(path, out);
  return out.size();
}

std::vector<Template> read_templates(const std::string& path) {
  const std::string data = read_file(path);
  Cursor cur(data);

  const char* magic = cur.take(4, "magic");
  if (std::memcmp(magic, kMagic, 4) != 0) {
    raise(ErrorCode::kBadMagic,
          "'" + path + "' is not a template file (magic mismatch)");
  }
  const std::uint16_t version = cur.u16("version");
  if (version != kFormatVersion) {
    raise(ErrorCode::kUnsupportedVersion,
          "'" + path + "' has version " + std::to_string(version) +
              ", expected " + std::to_string(kFormatVersion));
  }
  const std::uint32_t dim = cur.u32("dim");
  if (dim == 0) {
    raise(ErrorCode::kDimMismatch, "'" + path + "' declares dim 0");
  }
  const std::uint64_t count = cur.u64("count");

  std::vector<Template> templates;
  templates.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Template t;
    const std::uint16_t id_len = cur.u16("id length");
    t.id.assign(cur.take(id_len, "id"), id_len);
    const std::uint16_t subject_len = cur.u16("subject length");
    t.subject.assign(cur.take(subject_len, "subject"), subject_len);
    t.features.resize(dim);
    for (std::uint32_t d = 0; d < dim; ++d) {
      t.features[d] = cur.f32("feature");
    }
    auto problems = validate_template(t);
    if (!problems.empty()) {
      raise(ErrorCode::kBadValue, "record " + std::to_string(i) + " ('" +
                                      t.id + "'): " + problems.front());
    }
    templates.push_back(std::move(t));
  }
  if (cur.remaining() != 0) {
    raise(ErrorCode::kInvalidArgument,
          "'" + path + "' has " + std::to_string(cur.remaining()) +
              " trailing bytes after the last record");
  }
  return templates;
}

void write_templates_csv(const std::vector<Template>& templates,
                         const std::string& path) {
  if (templates.empty()) {
    raise(ErrorCode::kEmptyInput, "cannot write an empty template list");
  }
  const std::size_t dim = templates.front().features.size();
  std::string out = "template_id,subject_id";
  for (std::size_t d = 0; d < dim; ++d) {
    out += ",f" + std::to_string(d);
  }
  out += "\n";
  for (std::size_t i = 0; i < templates.size(); ++i) {
    const Template& t = templates[i];
    check_valid_for_write(t, i);
    if (t.features.size() != dim) {
      raise(ErrorCode::kDimMismatch,
            "template " + std::to_string(i) + " ('" + t.id + "') has dim " +
                std::to_string(t.features.size()) + ", expected " +
                std::to_string(dim));
    }
    out += t.id;
    out += ',';
    out += t.subject;
    for (float f : t.features) {
      out += ',';
      out += format_float(f);
    }
    out += '\n';
  }
  write_file(path, out);
}

std::vector<Template> read_templates_csv(const std::string& path) {
  const std::string data = read_file(path);
  if (data.empty()) {
    raise(ErrorCode::kEmptyFile, "'" + path + "' is empty");
  }
  auto lines = split_lines(data);
  auto header = split_fields(lines[0]);
  if (header.size() < 3 || header[0] != "template_id" ||
      header[1] != "subject_id") {
    raise(ErrorCode::kSchemaMismatch,
          "'" + path +
              "': expected header 'template_id,subject_id,f0,...', got '" +
              lines[0] + "'");
  }
  const std::size_t dim = header.size() - 2;
  for (std::size_t d = 0; d < dim; ++d) {
    if (header[2 + d] != "f" + std::to_string(d)) {
      raise(ErrorCode::kSchemaMismatch,
            "'" + path + "': feature column " + std::to_string(2 + d + 1) +
                " must be named 'f" + std::to_string(d) + "', got '" +
                header[2 + d] + "'");
    }
  }

  std::vector<Template> templates;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i]);
    if (fields.size() != 2 + dim) {
      raise(ErrorCode::kRaggedRow,
            "line " + std::to_string(i + 1) + ": expected " +
                std::to_string(2 + dim) + " fields, got " +
                std::to_string(fields.size()));
    }
    Template t;
    t.id = require_nonempty(fields[0], i + 1, 1);
    t.subject = require_nonempty(fields[1], i + 1, 2);
    t.features.reserve(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      t.features.push_back(parse_real32(fields[2 + d], i + 1, 2 + d + 1));
    }
    auto problems = validate_template(t);
    if (!problems.empty()) {
      bad_value(i + 1, 1, problems.front());
    }
    templates.push_back(std::move(t));
  }
  return templates;
}

std::vector<ComparisonPair> read_pairs_manifest(const std::string& path) {
  auto r = open_manifest(path, "fold,template_a,template_b,same");
  std::vector<ComparisonPair> pairs;
  for (const auto& [line, f] : r.rows(4, 4)) {
    ComparisonPair p;
    p.fold = parse_fold(f[0], line, 1);
    p.a = require_nonempty(f[1], line, 2);
    p.b = require_nonempty(f[2], line, 3);
    if (p.a == p.b) {
      bad_value(line, 3, "template_a and template_b must differ");
    }
    if (f[3] == "0") {
      p.same = false;
    } else if (f[3] == "1") {
      p.same = true;
    } else {
      bad_value(line, 4, "must be 0 or 1");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<GalleryRecord> read_gallery_manifest(const std::string& path) {
  auto r = open_manifest(path, "gallery_set,template_id,subject_id");
  std::vector<GalleryRecord> records;
  for (const auto& [line, f] : r.rows(3, 3)) {
    records.push_back({require_nonempty(f[0], line, 1),
                       require_nonempty(f[1], line, 2),
                       require_nonempty(f[2], line, 3)});
  }
  return records;
}

std::vector<ProbeRecord> read_probe_manifest(const std::string& path) {
  auto r = open_manifest(path, "template_id,subject_id");
  std::vector<ProbeRecord> records;
  for (const auto& [line, f] : r.rows(2, 2)) {
    records.push_back({require_nonempty(f[0], line, 1),
                       require_nonempty(f[1], line, 2)});
  }
  return records;
}

std::vector<MediaMapRecord> read_media_map_manifest(const std::string& path) {
  const std::string base = "media_template_id,subject_id,fused_template_id";
  std::string data = read_file(path);
  if (data.empty()) {
    raise(ErrorCode::kEmptyFile, "'" + path + "' is empty");
  }
  std::string first = split_lines(data)[0];
  if (!first.empty() && first.back() == '\r') first.pop_back();
  const bool with_weight = (first == base + ",weight");
  auto r = open_manifest(path, with_weight ? base + ",weight" : base);

  const std::size_t n_fields = with_weight ? 4 : 3;
  std::vector<MediaMapRecord> records;
  for (const auto& [line, f] : r.rows(n_fields, n_fields)) {
    MediaMapRecord rec;
    rec.media_template_id = require_nonempty(f[0], line, 1);
    rec.subject_id = require_nonempty(f[1], line, 2);
    rec.fused_template_id = require_nonempty(f[2], line, 3);
    if (with_weight) {
      const double w = parse_real(f[3], line, 4);
      if (!(w >= 0.0) || !std::isfinite(w)) {
        bad_value(line, 4, "must be a non-negative real");
      }
      rec.weight = w;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_pairs_manifest(const std::vector<ComparisonPair>& pairs,
                          const std::string& path) {
  std::string out = "fold,template_a,template_b,same\n";
  for (const auto& p : pairs) {
    out += std::to_string(p.fold) + "," + p.a + "," + p.b + "," +
           (p.same ? "1" : "0") + "\n";
  }
  write_file(path, out);
}

void write_gallery_manifest(const std::vector<GalleryRecord>& records,
                            const std::string& path) {
  std::string out = "gallery_set,template_id,subject_id\n";
  for (const auto& r : records) {
    out += r.gallery_set + "," + r.template_id + "," + r.subject_id + "\n";
  }
  write_file(path, out);
}

void write_probe_manifest(const std::vector<ProbeRecord>& records,
                          const std::string& path) {
  std::string out = "template_id,subject_id\n";
  for (const auto& r : records) {
    out += r.template_id + "," + r.subject_id + "\n";
  }
  write_file(path, out);
}

void write_media_map_manifest(const std::vector<MediaMapRecord>& records,
                              const std::string& path) {
  const bool with_weight =
      !records.empty() && records.front().weight.has_value();
  std::string out = "media_template_id,subject_id,fused_template_id";
  if (with_weight) out += ",weight";
  out += "\n";
  for (const auto& r : records) {
    if (r.weight.has_value() != with_weight) {
      raise(ErrorCode::kInvalidArgument,
            "media map records must all have or all lack a weight");
    }
    out += r.media_template_id + "," + r.subject_id + "," +
           r.fused_template_id;
    if (with_weight) out += "," + format_double(*r.weight);
    out += "\n";
  }
  write_file(path, out);
}

void write_curve_csv(const Curve& c, const std::string& path) {
  auto problems = validate_curve(c);
  if (!problems.empty()) {
    raise(ErrorCode::kInvalidArgument,
          "refusing to write invalid curve: " + problems.front());
  }
  std::string out = "# kind=" + std::string(to_string(c.kind)) +
                    " x=" + c.x_axis + " y=" + c.y_axis +
                    " folds=" + std::to_string(c.n_folds_aggregated) + "\n";
  out += "x,y\n";
  for (const auto& p : c.points) {
    out += format_double(p.x) + "," + format_double(p.y) + "\n";
  }
  write_file(path, out);
}

Curve read_curve_csv(const std::string& path) {
  const std::string data = read_file(path);
  if (data.empty()) {
    raise(ErrorCode::kEmptyFile, "'" + path + "' is empty");
  }
  auto lines = split_lines(data);
  if (lines.size() < 2 || lines[0].empty() || lines[0][0] != '#') {
    raise(ErrorCode::kSchemaMismatch,
          "'" + path + "': expected a '#' comment line then an 'x,y' header");
  }

  Curve c;
  std::istringstream meta(lines[0].substr(1));
  std::string token;
  bool have_kind = false;
  while (meta >> token) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "kind") {
      c.kind = curve_kind_from_string(value);
      have_kind = true;
    } else if (key == "x") {
      c.x_axis = value;
    } else if (key == "y") {
      c.y_axis = value;
    } else if (key == "folds") {
      c.n_folds_aggregated = parse_fold(value, 1, 1);
    }
  }
  if (!have_kind || c.x_axis.empty() || c.y_axis.empty()) {
    raise(ErrorCode::kSchemaMismatch,
          "'" + path + "': comment line must carry kind=, x= and y=");
  }

  std::string header = lines[1];
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "x,y") {
    raise(ErrorCode::kSchemaMismatch,
          "'" + path + "': expected header 'x,y', got '" + header + "'");
  }

  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i]);
    if (fields.size() != 2) {
      raise(ErrorCode::kRaggedRow, "line " + std::to_string(i + 1) +
                                       ": expected 2 fields, got " +
                                       std::to_string(fields.size()));
    }
    c.points.push_back({parse_real(fields[0], i + 1, 1),
                        parse_real(fields[1], i + 1, 2)});
  }
  auto problems = validate_curve(c);
  if (!problems.empty()) {
    raise(ErrorCode::kBadValue, "'" + path + "': " + problems.front());
  }
  return c;
}

}  // namespace biomeval
