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

#include "faithful/report.h"

#include <gtest/gtest.h>

#include "../support/temp_dir.h"
#include "faithful/metrics.h"

namespace faithful {
namespace {

using nlohmann::json;

EntityCounts Counts(std::uint64_t n_h, std::uint64_t n_h_in_s, std::uint64_t n_h_in_t, std::uint64_t n_t) {
  EntityCounts c;
  c.n_h = n_h;
  c.n_h_in_s = n_h_in_s;
  c.n_h_in_t = n_h_in_t;
  c.n_t = n_t;
  return c;
}

TEST(Report, SchemaAndRoundTrip) {
  const auto report = AggregateCorpus(std::vector<EntityCounts>{Counts(3, 2, 1, 4), Counts(0, 0, 0, 2)});
  const json j = ReportToJson(report);
  for (const char *key : {"counts", "metrics", "examples_total", "examples_skipped"}) EXPECT_TRUE(j.contains(key));
  for (const char *m : {"prec_s", "prec_t", "recall_t", "f1_t"}) {
    EXPECT_TRUE(j["metrics"][m].contains("macro")) << m;
    EXPECT_TRUE(j["metrics"][m].contains("micro")) << m;
    EXPECT_TRUE(j["examples_skipped"].contains(m)) << m;
  }
  EXPECT_EQ(j["counts"].size(), 5u);
  EXPECT_EQ(j["metrics"]["prec_s"]["micro_pct"], 66.7);
  EXPECT_EQ(j["examples_skipped"]["prec_s"], 1);
  EXPECT_EQ(ReportFromJson(j), report);
  EXPECT_EQ(ReportFromJson(json::parse(RenderJson(j))), report);
}

TEST(Report, UndefinedRendersAsNull) {
  const auto report = AggregateCorpus(std::vector<EntityCounts>{Counts(0, 0, 0, 0)});
  const json j = ReportToJson(report);
  EXPECT_TRUE(j["metrics"]["prec_s"]["macro"].is_null());
  EXPECT_TRUE(j["metrics"]["prec_s"]["micro_pct"].is_null());
  EXPECT_TRUE(j["metrics"]["f1_t"]["micro"].is_null());
}

TEST(Report, RenderingIsDeterministicAndSorted) {
  const json j = {{"zeta", 1}, {"alpha", {{"b", 0.1}, {"a", nullptr}}}};
  EXPECT_EQ(RenderJson(j), "{\n  \"alpha\": {\n    \"a\": null,\n    \"b\": 0.1\n  },\n  \"zeta\": 1\n}\n");
}

TEST(Report, PrepMeta) {
  JaensConfig cfg;
  const json j = PrepMetaToJson(cfg, TrainingPrepMeta::ForDataset("xsum"));
  EXPECT_EQ(j["bio_encoding"]["B"], 0);
  EXPECT_EQ(j["bio_encoding"]["I"], 1);
  EXPECT_EQ(j["bio_encoding"]["O"], 2);
  EXPECT_EQ(j["jaens"]["boundary_token"], "<ent-summary-sep>");
  EXPECT_EQ(j["training"]["alpha"], 0.15);
  EXPECT_EQ(j["stopwords_version"], "en-179-v1");
}

TEST(Report, FilterStats) {
  FilterStats s;
  s.examples_before = 3;
  s.examples_after = 2;
  s.sentences_before = 6;
  s.sentences_after = 3;
  s.avg_sentences_before = 2.0;
  s.avg_sentences_after = 1.5;
  const json j = FilterStatsToJson(s);
  EXPECT_EQ(j["examples_removed"], 1);
  EXPECT_EQ(j["removed_pct"], 33.3);
  EXPECT_EQ(j["avg_sentences_after"], 1.5);
}

TEST(Report, WriteJsonFile) {
  testing::TempDir dir;
  WriteJsonFile(dir.Path("x.json"), json{{"k", 1}});
  EXPECT_EQ(testing::ReadFile(dir.Path("x.json")), "{\n  \"k\": 1\n}\n");
  EXPECT_THROW(WriteJsonFile(dir.Path("missing/x.json"), json{}), std::runtime_error);
}

}  // namespace
}  // namespace faithful
