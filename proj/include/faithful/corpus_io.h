// Copyright 2026 The entity-faithful Authors.
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

// JSONL corpus files.
//
// Dataset lines:     {"id", "source", "summary", "hypothesis"?}
// Annotation lines:  {"id", "field", "entities": [{"text", "type", "start",
//                     "end"}], "sentences"?: [{"start", "end"}],
//                     "tokens"?: [{"start", "end"}]}
//
// Offsets count Unicode scalar values. Blank lines and lines starting with
// '#' are skipped in both files.

#ifndef FAITHFUL_CORPUS_IO_H_
#define FAITHFUL_CORPUS_IO_H_

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "faithful/types.h"
#include "json.hpp"

namespace faithful {

// Fatal input problem: unreadable file, duplicate id, or any rejection in
// strict mode.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetRecord {
  std::string id;
  std::string source;
  std::string summary;
  std::optional<std::string> hypothesis;
  bool operator==(const DatasetRecord &) const = default;
};

struct EntityRecord {
  std::string text;
  std::string type;
  std::size_t start = 0;
  std::size_t end = 0;
  bool operator==(const EntityRecord &) const = default;
};

struct AnnotationRecord {
  std::string id;
  std::string field;  // source | summary | hypothesis
  std::vector<EntityRecord> entities;
  std::optional<std::vector<Span>> sentences;
  std::optional<std::vector<Span>> tokens;
  bool operator==(const AnnotationRecord &) const = default;
};

// Throw std::invalid_argument describing the first schema problem.
DatasetRecord ParseDatasetRecord(const nlohmann::json &j);
AnnotationRecord ParseAnnotationRecord(const nlohmann::json &j);
nlohmann::json ToJson(const DatasetRecord &record);
nlohmann::json ToJson(const AnnotationRecord &record);

// Serialized form of one JSON value on a single line.
std::string JsonLine(const nlohmann::json &j);

struct LoadOptions {
  bool strict = false;
  // Receives every diagnostic as it happens, if set.
  std::ostream *diagnostics = nullptr;
  std::size_t max_kept_diagnostics = 200;
};

struct LoadStats {
  std::uint64_t records_read = 0;
  std::uint64_t examples_loaded = 0;
  std::uint64_t records_rejected = 0;
  std::uint64_t annotation_lines_rejected = 0;
  std::uint64_t dropped_entity_labels = 0;  // recognizer labels outside the whitelist
  std::uint64_t unknown_annotation_ids = 0;
  std::uint64_t validation_warnings = 0;
  std::vector<std::string> diagnostics;  // first max_kept_diagnostics messages
};

// Builds one text from its raw string and (optional) annotation, synthesizing
// tokens and sentences the annotation leaves out. Entities with labels
// outside the whitelist are dropped and counted in `dropped_labels`.
AnnotatedText BuildAnnotatedText(const std::string &text, const AnnotationRecord *annotation,
                                 std::uint64_t *dropped_labels);

// Streams Examples out of a dataset file joined with an annotation file.
// The annotation file is indexed by (id, field) up front, so the two files
// may be in any relative order; only the index and one record are resident.
class CorpusReader {
 public:
  CorpusReader(const std::string &dataset_path, const std::string &annotations_path, LoadOptions options = {});

  // Next valid example, or nullopt at end of input. Rejected records are
  // skipped (and counted) unless strict, in which case LoadError is thrown.
  std::optional<Example> Next();

  const LoadStats &stats() const { return stats_; }

 private:
  void Diagnose(const std::string &message);
  void Reject(const std::string &message);
  std::optional<AnnotationRecord> ReadAnnotation(std::streampos offset);
  void ReportUnusedAnnotations();

  std::string dataset_path_;
  std::string annotations_path_;
  LoadOptions options_;
  std::ifstream dataset_;
  std::ifstream annotations_;
  std::map<std::pair<std::string, std::string>, std::streampos> index_;
  std::set<std::string> seen_ids_;
  std::size_t line_no_ = 0;
  bool finished_ = false;
  LoadStats stats_;
};

std::vector<Example> LoadCorpus(const std::string &dataset_path, const std::string &annotations_path,
                                LoadOptions options = {}, LoadStats *stats = nullptr);

// Reads a dataset file without annotations (used by the annotate command).
std::vector<DatasetRecord> LoadDatasetRecords(const std::string &path);

// Writes examples in the same two-file layout LoadCorpus reads. Token and
// sentence spans are always written out explicitly.
class CorpusWriter {
 public:
  CorpusWriter(std::ostream &dataset, std::ostream &annotations) : dataset_(&dataset), annotations_(&annotations) {}
  void Write(const Example &example);

 private:
  std::ostream *dataset_;
  std::ostream *annotations_;
};

DatasetRecord ToDatasetRecord(const Example &example);
AnnotationRecord ToAnnotationRecord(const std::string &id, const std::string &field, const AnnotatedText &text);

}  // namespace faithful

#endif  // FAITHFUL_CORPUS_IO_H_
