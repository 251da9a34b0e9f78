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

#include <gtest/gtest.h>

#include <sstream>

#include "../support/builders.h"
#include "../support/temp_dir.h"

namespace faithful {
namespace {

using nlohmann::json;
using testing::Annotate;
using testing::MakeExample;
using testing::TempDir;

constexpr const char *kDataset =
    R"({"id": "a", "source": "Obama visited Paris.", "summary": "Obama in Paris.", "hypothesis": "Obama in Rome."}
{"id": "b", "source": "Merkel spoke.", "summary": "Merkel spoke."}
{"id": "c", "source": "Nothing.", "summary": ""}
)";

constexpr const char *kAnnotations =
    R"(# annotator v1 header
{"id": "a", "field": "source", "entities": [{"text": "Obama", "type": "PERSON", "start": 0, "end": 5}, {"text": "Paris", "type": "GPE", "start": 14, "end": 19}]}
{"id": "a", "field": "summary", "entities": [{"text": "Paris", "type": "GPE", "start": 9, "end": 14}, {"text": "Obama", "type": "PERSON", "start": 0, "end": 5}]}
{"id": "a", "field": "hypothesis", "entities": [{"text": "Obama", "type": "PERSON", "start": 0, "end": 5}, {"text": "Rome", "type": "GPE", "start": 9, "end": 13}]}

{"id": "b", "field": "source", "entities": [{"text": "Merkel", "type": "PERSON", "start": 0, "end": 6}], "sentences": [{"start": 0, "end": 13}]}
{"id": "b", "field": "summary", "entities": [{"text": "Merkel", "type": "PERSON", "start": 0, "end": 6}, {"text": "spoke", "type": "DATE", "start": 7, "end": 12}]}
{"id": "c", "field": "source", "entities": []}
)";

TEST(Records, ParseAndSerialize) {
  const auto r = ParseDatasetRecord(json::parse(R"({"id": "x", "source": "s", "summary": "t"})"));
  EXPECT_EQ(r.id, "x");
  EXPECT_FALSE(r.hypothesis);
  EXPECT_EQ(ParseDatasetRecord(ToJson(r)), r);
  EXPECT_THROW(ParseDatasetRecord(json::parse(R"({"id": "x", "source": "s"})")), std::invalid_argument);
  EXPECT_THROW(ParseDatasetRecord(json::parse(R"({"id": 3, "source": "s", "summary": "t"})")), std::invalid_argument);

  const auto a = ParseAnnotationRecord(json::parse(
      R"({"id": "x", "field": "summary", "entities": [{"text": "t", "type": "ORG", "start": 0, "end": 1}],
          "tokens": [{"start": 0, "end": 1}]})"));
  EXPECT_EQ(a.entities.size(), 1u);
  EXPECT_TRUE(a.tokens);
  EXPECT_FALSE(a.sentences);
  EXPECT_EQ(ParseAnnotationRecord(ToJson(a)), a);
  EXPECT_THROW(ParseAnnotationRecord(json::parse(R"({"id": "x", "field": "title", "entities": []})")),
               std::invalid_argument);
  EXPECT_THROW(ParseAnnotationRecord(json::parse(
                   R"({"id": "x", "field": "source", "entities": [{"text": "t", "type": "ORG", "start": -1, "end": 1}]})")),
               std::invalid_argument);
}

TEST(JsonLine, SortedKeysSingleLine) {
  EXPECT_EQ(JsonLine(json{{"b", 1}, {"a", "é"}}), R"({"a":"é","b":1})");
}

TEST(Load, JoinsAndSynthesizes) {
  TempDir dir;
  LoadStats stats;
  const auto corpus = LoadCorpus(dir.Write("d.jsonl", kDataset), dir.Write("a.jsonl", kAnnotations), {}, &stats);
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(stats.records_read, 3u);
  EXPECT_EQ(stats.records_rejected, 0u);
  EXPECT_EQ(stats.dropped_entity_labels, 1u);

  const Example &a = corpus[0];
  ASSERT_EQ(a.summary.entities().size(), 2u);
  EXPECT_EQ(a.summary.entities()[0].surface, "Obama");  // sorted by span
  EXPECT_EQ(a.source.tokens().size(), 4u);
  ASSERT_TRUE(a.hypothesis);
  EXPECT_EQ(a.hypothesis->entities()[1].type, EntityType::kGpe);

  EXPECT_FALSE(corpus[1].hypothesis);
  EXPECT_EQ(corpus[1].summary.entities().size(), 1u);
  EXPECT_TRUE(corpus[2].summary.entities().empty());
  EXPECT_TRUE(corpus[2].summary.sentences().empty());
}

TEST(Load, RejectsSpanBeyondText) {
  TempDir dir;
  const std::string ds = dir.Write("d.jsonl", R"({"id": "a", "source": "Obama", "summary": "Obama"}
{"id": "b", "source": "Paris", "summary": "Paris"}
)");
  const std::string ann = dir.Write("a.jsonl", R"({"id": "a", "field": "source", "entities": []}
{"id": "a", "field": "summary", "entities": [{"text": "Obama", "type": "PERSON", "start": 0, "end": 9}]}
{"id": "b", "field": "source", "entities": []}
{"id": "b", "field": "summary", "entities": []}
)");
  LoadStats stats;
  const auto corpus = LoadCorpus(ds, ann, {}, &stats);
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_EQ(corpus[0].id, "b");
  EXPECT_EQ(stats.records_rejected, 1u);
  ASSERT_FALSE(stats.diagnostics.empty());
  EXPECT_NE(stats.diagnostics[0].find("d.jsonl:1:"), std::string::npos);

  LoadOptions strict;
  strict.strict = true;
  EXPECT_THROW(LoadCorpus(ds, ann, strict), LoadError);
}

TEST(Load, UnparseableLineIsCountedWithLineNumber) {
  TempDir dir;
  const std::string ds = dir.Write("d.jsonl", "{\"id\": \"a\", \"source\": \"\", \"summary\": \"\"}\n{not json\n");
  const std::string ann = dir.Write("a.jsonl", "");
  LoadStats stats;
  const auto corpus = LoadCorpus(ds, ann, {}, &stats);
  EXPECT_EQ(corpus.size(), 1u);
  EXPECT_EQ(stats.records_rejected, 1u);
  EXPECT_NE(stats.diagnostics.at(0).find(":2:"), std::string::npos);
}

TEST(Load, DuplicateIdIsFatal) {
  TempDir dir;
  const std::string ds = dir.Write("d.jsonl", "{\"id\": \"a\", \"source\": \"\", \"summary\": \"\"}\n"
                                              "{\"id\": \"a\", \"source\": \"\", \"summary\": \"\"}\n");
  EXPECT_THROW(LoadCorpus(ds, dir.Write("a.jsonl", "")), LoadError);
  EXPECT_THROW(LoadDatasetRecords(ds), LoadError);
}

TEST(Load, DuplicateAnnotationIsFatal) {
  TempDir dir;
  const std::string ann = dir.Write("a.jsonl", "{\"id\": \"a\", \"field\": \"source\", \"entities\": []}\n"
                                               "{\"id\": \"a\", \"field\": \"source\", \"entities\": []}\n");
  EXPECT_THROW(LoadCorpus(dir.Write("d.jsonl", ""), ann), LoadError);
}

TEST(Load, UnknownAnnotationIdIsAWarning) {
  TempDir dir;
  const std::string ds = dir.Write("d.jsonl", "{\"id\": \"a\", \"source\": \"\", \"summary\": \"\"}\n");
  const std::string ann = dir.Write("a.jsonl", "{\"id\": \"zzz\", \"field\": \"source\", \"entities\": []}\n");
  LoadStats stats;
  EXPECT_EQ(LoadCorpus(ds, ann, {}, &stats).size(), 1u);
  EXPECT_EQ(stats.unknown_annotation_ids, 1u);
}

TEST(Load, MissingAnnotationForNonEmptyFieldRejects) {
  TempDir dir;
  const std::string ds = dir.Write("d.jsonl", "{\"id\": \"a\", \"source\": \"Text\", \"summary\": \"\"}\n");
  LoadStats stats;
  EXPECT_TRUE(LoadCorpus(ds, dir.Write("a.jsonl", ""), {}, &stats).empty());
  EXPECT_EQ(stats.records_rejected, 1u);
}

TEST(Load, MissingFilesAreFatal) {
  TempDir dir;
  EXPECT_THROW(LoadCorpus(dir.Path("nope.jsonl"), dir.Write("a.jsonl", "")), LoadError);
  EXPECT_THROW(LoadCorpus(dir.Write("d.jsonl", ""), dir.Path("nope.jsonl")), LoadError);
}

TEST(Write, RoundTrips) {
  std::vector<Example> corpus = {
      MakeExample("one", Annotate("Zoë Ćirić visited São Paulo.", {"Zoë Ćirić", "São Paulo"}),
                  Annotate("Ćirić in São Paulo. It rained.", {"Ćirić", "São Paulo"}),
                  Annotate("Zoë went.", {"Zoë"})),
      MakeExample("two", Annotate("", {}), Annotate("", {})),
  };
  std::ostringstream ds, ann;
  CorpusWriter writer(ds, ann);
  for (const Example &ex : corpus) writer.Write(ex);

  TempDir dir;
  const auto loaded = LoadCorpus(dir.Write("d.jsonl", ds.str()), dir.Write("a.jsonl", ann.str()));
  EXPECT_EQ(loaded, corpus);
}

}  // namespace
}  // namespace faithful
