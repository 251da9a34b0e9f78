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

#include "faithful/corpus_io.h"

#include <algorithm>

#include "faithful/sentences.h"
#include "faithful/tokenizer.h"
#include "faithful/validate.h"

namespace faithful {

using nlohmann::json;

namespace {

bool IsSkippable(const std::string &line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

void StripCr(std::string *line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

const json &Require(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing \"") + key + "\"");
  return *it;
}

std::string RequireString(const json &j, const char *key) {
  const json &v = Require(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t RequireOffset(const json &j, const char *key) {
  const json &v = Require(j, key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw std::invalid_argument(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Span> ParseSpans(const json &j, const char *key) {
  if (!j.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  std::vector<Span> spans;
  spans.reserve(j.size());
  for (const json &s : j) {
    if (!s.is_object()) throw std::invalid_argument(std::string("\"") + key + "\" entries must be objects");
    spans.push_back({RequireOffset(s, "start"), RequireOffset(s, "end")});
  }
  return spans;
}

json SpansToJson(const std::vector<Span> &spans) {
  json out = json::array();
  for (const Span &s : spans) out.push_back({{"start", s.start}, {"end", s.end}});
  return out;
}

const char *kFields[] = {"source", "summary", "hypothesis"};

}  // namespace

DatasetRecord ParseDatasetRecord(const json &j) {
  if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
  DatasetRecord r;
  r.id = RequireString(j, "id");
  if (r.id.empty()) throw std::invalid_argument("\"id\" must be non-empty");
  r.source = RequireString(j, "source");
  r.summary = RequireString(j, "summary");
  auto it = j.find("hypothesis");
  if (it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw std::invalid_argument("\"hypothesis\" must be a string or null");
    r.hypothesis = it->get<std::string>();
  }
  return r;
}

AnnotationRecord ParseAnnotationRecord(const json &j) {
  if (!j.is_object()) throw std::invalid_argument("annotation must be a JSON object");
  AnnotationRecord r;
  r.id = RequireString(j, "id");
  r.field = RequireString(j, "field");
  if (std::find(std::begin(kFields), std::end(kFields), r.field) == std::end(kFields)) {
    throw std::invalid_argument("unknown field \"" + r.field + "\"");
  }
  const json &entities = Require(j, "entities");
  if (!entities.is_array()) throw std::invalid_argument("\"entities\" must be an array");
  for (const json &e : entities) {
    if (!e.is_object()) throw std::invalid_argument("entity must be an object");
    r.entities.push_back({RequireString(e, "text"), RequireString(e, "type"), RequireOffset(e, "start"),
                          RequireOffset(e, "end")});
  }
  if (auto it = j.find("sentences"); it != j.end() && !it->is_null()) r.sentences = ParseSpans(*it, "sentences");
  if (auto it = j.find("tokens"); it != j.end() && !it->is_null()) r.tokens = ParseSpans(*it, "tokens");
  return r;
}

json ToJson(const DatasetRecord &r) {
  json j = {{"id", r.id}, {"source", r.source}, {"summary", r.summary}};
  if (r.hypothesis) j["hypothesis"] = *r.hypothesis;
  return j;
}

json ToJson(const AnnotationRecord &r) {
  json entities = json::array();
  for (const EntityRecord &e : r.entities) {
    entities.push_back({{"text", e.text}, {"type", e.type}, {"start", e.start}, {"end", e.end}});
  }
  json j = {{"id", r.id}, {"field", r.field}, {"entities", std::move(entities)}};
  if (r.sentences) j["sentences"] = SpansToJson(*r.sentences);
  if (r.tokens) j["tokens"] = SpansToJson(*r.tokens);
  return j;
}

std::string JsonLine(const json &j) { return j.dump(-1, ' ', false, json::error_handler_t::strict); }

AnnotatedText BuildAnnotatedText(const std::string &text, const AnnotationRecord *annotation,
                                 std::uint64_t *dropped_labels) {
  Utf8Text decoded(text);
  std::vector<EntitySpan> entities;
  std::optional<std::vector<Span>> tokens;
  std::optional<std::vector<Span>> sentences;
  if (annotation != nullptr) {
    for (const EntityRecord &e : annotation->entities) {
      auto type = ParseEntityType(e.type);
      if (!type) {
        if (dropped_labels != nullptr) ++*dropped_labels;
        continue;
      }
      entities.push_back({{e.start, e.end}, e.text, *type});
    }
    tokens = annotation->tokens;
    sentences = annotation->sentences;
  }
  std::stable_sort(entities.begin(), entities.end(),
                   [](const EntitySpan &a, const EntitySpan &b) { return a.span < b.span; });
  std::vector<Span> token_spans = tokens ? std::move(*tokens) : Tokenize(decoded);
  std::vector<Span> sentence_spans = SegmentSentences(decoded.code_points(), sentences);
  return AnnotatedText(text, std::move(token_spans), std::move(sentence_spans), std::move(entities));
}

CorpusReader::CorpusReader(const std::string &dataset_path, const std::string &annotations_path, LoadOptions options)
    : dataset_path_(dataset_path),
      annotations_path_(annotations_path),
      options_(options),
      dataset_(dataset_path, std::ios::binary),
      annotations_(annotations_path, std::ios::binary) {
  if (!dataset_) throw LoadError("cannot open dataset " + dataset_path);
  if (!annotations_) throw LoadError("cannot open annotations " + annotations_path);

  std::string line;
  std::size_t ann_line = 0;
  while (true) {
    const std::streampos offset = annotations_.tellg();
    if (!std::getline(annotations_, line)) break;
    ++ann_line;
    StripCr(&line);
    if (IsSkippable(line)) continue;
    try {
      AnnotationRecord r = ParseAnnotationRecord(json::parse(line));
      auto key = std::make_pair(r.id, r.field);
      if (!index_.emplace(key, offset).second) {
        throw LoadError(annotations_path + ":" + std::to_string(ann_line) + ": duplicate annotation for id \"" +
                        r.id + "\" field \"" + r.field + "\"");
      }
    } catch (const LoadError &) {
      throw;
    } catch (const std::exception &e) {
      ++stats_.annotation_lines_rejected;
      const std::string msg = annotations_path + ":" + std::to_string(ann_line) + ": " + e.what();
      if (options_.strict) throw LoadError(msg);
      Diagnose(msg);
    }
  }
  annotations_.clear();
}

void CorpusReader::Diagnose(const std::string &message) {
  if (options_.diagnostics != nullptr) *options_.diagnostics << message << '\n';
  if (stats_.diagnostics.size() < options_.max_kept_diagnostics) stats_.diagnostics.push_back(message);
}

void CorpusReader::Reject(const std::string &message) {
  ++stats_.records_rejected;
  if (options_.strict) throw LoadError(message);
  Diagnose(message);
}

std::optional<AnnotationRecord> CorpusReader::ReadAnnotation(std::streampos offset) {
  annotations_.clear();
  annotations_.seekg(offset);
  std::string line;
  if (!std::getline(annotations_, line)) throw LoadError("cannot re-read " + annotations_path_);
  StripCr(&line);
  return ParseAnnotationRecord(json::parse(line));
}

void CorpusReader::ReportUnusedAnnotations() {
  std::string last_id;
  for (const auto &[key, offset] : index_) {
    if (seen_ids_.count(key.first) > 0 || key.first == last_id) continue;
    last_id = key.first;
    ++stats_.unknown_annotation_ids;
    Diagnose(annotations_path_ + ": warning: annotation for unknown id \"" + key.first + "\"");
  }
}

std::optional<Example> CorpusReader::Next() {
  if (finished_) return std::nullopt;
  std::string line;
  while (std::getline(dataset_, line)) {
    ++line_no_;
    StripCr(&line);
    if (IsSkippable(line)) continue;
    ++stats_.records_read;
    const std::string where = dataset_path_ + ":" + std::to_string(line_no_) + ": ";

    DatasetRecord record;
    try {
      record = ParseDatasetRecord(json::parse(line));
    } catch (const std::exception &e) {
      Reject(where + e.what());
      continue;
    }
    if (!seen_ids_.insert(record.id).second) throw LoadError(where + "duplicate id \"" + record.id + "\"");

    try {
      Example ex;
      ex.id = record.id;
      auto build = [&](const std::string &field, const std::string &text) {
        auto it = index_.find({record.id, field});
        std::optional<AnnotationRecord> ann;
        if (it != index_.end()) {
          ann = ReadAnnotation(it->second);
        } else if (!text.empty()) {
          throw std::invalid_argument("no annotation for field \"" + field + "\"");
        }
        return BuildAnnotatedText(text, ann ? &*ann : nullptr, &stats_.dropped_entity_labels);
      };
      ex.source = build("source", record.source);
      ex.summary = build("summary", record.summary);
      if (record.hypothesis) ex.hypothesis = build("hypothesis", *record.hypothesis);

      std::vector<Finding> findings = ValidateExample(ex);
      if (HasErrors(findings)) {
        auto first = std::find_if(findings.begin(), findings.end(), [](const Finding &f) { return f.is_error(); });
        Reject(where + "id \"" + record.id + "\": " + first->ToString());
        continue;
      }
      for (const Finding &f : findings) {
        ++stats_.validation_warnings;
        Diagnose(where + "id \"" + record.id + "\": " + f.ToString());
      }
      ++stats_.examples_loaded;
      return ex;
    } catch (const LoadError &) {
      throw;
    } catch (const std::exception &e) {
      Reject(where + "id \"" + record.id + "\": " + e.what());
    }
  }
  finished_ = true;
  ReportUnusedAnnotations();
  return std::nullopt;
}

std::vector<Example> LoadCorpus(const std::string &dataset_path, const std::string &annotations_path,
                                LoadOptions options, LoadStats *stats) {
  CorpusReader reader(dataset_path, annotations_path, options);
  std::vector<Example> out;
  while (auto ex = reader.Next()) out.push_back(std::move(*ex));
  if (stats != nullptr) *stats = reader.stats();
  return out;
}

std::vector<DatasetRecord> LoadDatasetRecords(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open dataset " + path);
  std::vector<DatasetRecord> out;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCr(&line);
    if (IsSkippable(line)) continue;
    try {
      out.push_back(ParseDatasetRecord(json::parse(line)));
    } catch (const std::exception &e) {
      throw LoadError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!ids.insert(out.back().id).second) {
      throw LoadError(path + ":" + std::to_string(line_no) + ": duplicate id \"" + out.back().id + "\"");
    }
  }
  return out;
}

DatasetRecord ToDatasetRecord(const Example &example) {
  DatasetRecord r;
  r.id = example.id;
  r.source = example.source.str();
  r.summary = example.summary.str();
  if (example.hypothesis) r.hypothesis = example.hypothesis->str();
  return r;
}

AnnotationRecord ToAnnotationRecord(const std::string &id, const std::string &field, const AnnotatedText &text) {
  AnnotationRecord r;
  r.id = id;
  r.field = field;
  for (const EntitySpan &e : text.entities()) {
    r.entities.push_back({e.surface, std::string(EntityTypeName(e.type)), e.span.start, e.span.end});
  }
  r.sentences = text.sentences();
  r.tokens = text.tokens();
  return r;
}

void CorpusWriter::Write(const Example &example) {
  *dataset_ << JsonLine(ToJson(ToDatasetRecord(example))) << '\n';
  *annotations_ << JsonLine(ToJson(ToAnnotationRecord(example.id, "source", example.source))) << '\n';
  *annotations_ << JsonLine(ToJson(ToAnnotationRecord(example.id, "summary", example.summary))) << '\n';
  if (example.hypothesis) {
    *annotations_ << JsonLine(ToJson(ToAnnotationRecord(example.id, "hypothesis", *example.hypothesis))) << '\n';
  }
}

}  // namespace faithful
