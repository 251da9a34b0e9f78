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

#include "faithful/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "../support/builders.h"
#include "faithful/corpus_io.h"
#include "json.hpp"

namespace faithful {
namespace {

using testing::Annotate;
using testing::MakeExample;

EntityCounts Counts(std::uint64_t n_h, std::uint64_t n_h_in_s, std::uint64_t n_h_in_t, std::uint64_t n_t,
                    std::uint64_t n_t_in_s = 0) {
  EntityCounts c;
  c.n_h = n_h;
  c.n_h_in_s = n_h_in_s;
  c.n_h_in_t = n_h_in_t;
  c.n_t = n_t;
  c.n_t_in_s = n_t_in_s;
  return c;
}

TEST(Metrics, PerExampleValues) {
  const auto m = ComputeMetrics(Counts(4, 3, 2, 5));
  EXPECT_DOUBLE_EQ(*m.prec_s, 0.75);
  EXPECT_DOUBLE_EQ(*m.prec_t, 0.5);
  EXPECT_DOUBLE_EQ(*m.recall_t, 0.4);
  EXPECT_DOUBLE_EQ(*m.f1_t, 2 * 0.5 * 0.4 / 0.9);
}

TEST(Metrics, UndefinedDenominators) {
  const auto no_hyp = ComputeMetrics(Counts(0, 0, 0, 3));
  EXPECT_FALSE(no_hyp.prec_s);
  EXPECT_FALSE(no_hyp.prec_t);
  EXPECT_EQ(no_hyp.recall_t, 0.0);
  EXPECT_FALSE(no_hyp.f1_t);

  const auto no_gold = ComputeMetrics(Counts(2, 1, 0, 0));
  EXPECT_EQ(no_gold.prec_s, 0.5);
  EXPECT_EQ(no_gold.prec_t, 0.0);
  EXPECT_FALSE(no_gold.recall_t);
  EXPECT_FALSE(no_gold.f1_t);

  const auto both_zero = ComputeMetrics(Counts(2, 0, 0, 2));
  EXPECT_EQ(both_zero.prec_t, 0.0);
  EXPECT_EQ(both_zero.recall_t, 0.0);
  EXPECT_FALSE(both_zero.f1_t);
}

TEST(Metrics, CountsMentionsNotTypes) {
  const auto source = Annotate("Obama met Merkel.", {});
  const auto summary = Annotate("Obama and Obama met Putin.", {"Obama", "Obama", "Putin"});
  const auto hyp = Annotate("Obama, Obama and Obama.", {"Obama", "Obama", "Obama"});
  const auto c = CountMatches(MakeExample("x", source, summary, hyp));
  EXPECT_EQ(c.n_t, 3u);
  EXPECT_EQ(c.n_t_in_s, 2u);
  EXPECT_EQ(c.n_h, 3u);
  EXPECT_EQ(c.n_h_in_s, 3u);
  EXPECT_EQ(c.n_h_in_t, 3u);
  EXPECT_TRUE(c.IsConsistent());
}

TEST(Metrics, MissingHypothesisCountsNothing) {
  const auto c = CountMatches(MakeExample("x", Annotate("Obama", {}), Annotate("Obama", {"Obama"})));
  EXPECT_FALSE(c.hypothesis_present);
  EXPECT_EQ(c.n_h, 0u);
  EXPECT_EQ(c.n_t_in_s, 1u);
}

TEST(Aggregate, SingletonMacroEqualsMicro) {
  const EntityCounts c = Counts(7, 5, 3, 4, 2);
  const auto r = AggregateCorpus(std::vector<EntityCounts>{c});
  EXPECT_EQ(r.prec_s.macro, r.prec_s.micro);
  EXPECT_EQ(r.prec_t.macro, r.prec_t.micro);
  EXPECT_EQ(r.recall_t.macro, r.recall_t.micro);
  EXPECT_EQ(r.f1_t.macro, r.f1_t.micro);
}

TEST(Aggregate, SkipsUndefinedInMacro) {
  const auto r = AggregateCorpus(std::vector<EntityCounts>{Counts(2, 1, 1, 2), Counts(0, 0, 0, 1)});
  EXPECT_DOUBLE_EQ(*r.prec_s.macro, 0.5);
  EXPECT_EQ(r.examples_skipped.prec_s, 1u);
  EXPECT_EQ(r.examples_skipped.recall_t, 0u);
  EXPECT_DOUBLE_EQ(*r.recall_t.macro, 0.25);
  EXPECT_DOUBLE_EQ(*r.recall_t.micro, 1.0 / 3.0);
  EXPECT_EQ(r.examples_total, 2u);
}

TEST(Aggregate, AllUndefinedStaysUndefined) {
  const auto r = AggregateCorpus(std::vector<EntityCounts>{Counts(0, 0, 0, 0), Counts(0, 0, 0, 0)});
  EXPECT_FALSE(r.prec_s.macro);
  EXPECT_FALSE(r.prec_s.micro);
  EXPECT_FALSE(r.f1_t.micro);
  EXPECT_EQ(r.examples_skipped.f1_t, 2u);
}

TEST(Aggregate, EmptyCorpusThrows) {
  EXPECT_THROW(AggregateCorpus({}), std::invalid_argument);
  EXPECT_THROW(CorpusAggregator().Finish(), std::invalid_argument);
}

TEST(Aggregate, RejectsInconsistentCounts) {
  CorpusAggregator agg;
  EXPECT_THROW(agg.Add(Counts(1, 2, 0, 0)), std::invalid_argument);
}

TEST(Aggregate, OrderAndShardingInvariant) {
  std::mt19937_64 rng(7);
  std::vector<EntityCounts> all;
  for (int i = 0; i < 500; ++i) {
    const auto n_h = rng() % 9, n_t = rng() % 9;
    all.push_back(Counts(n_h, n_h ? rng() % (n_h + 1) : 0, n_h ? rng() % (std::min(n_h, n_t) + 1) : 0, n_t,
                         n_t ? rng() % (n_t + 1) : 0));
  }
  const MetricReport base = AggregateCorpus(all);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(all.begin(), all.end(), rng);
    CorpusAggregator a, b;
    for (std::size_t i = 0; i < all.size(); ++i) (i % 3 == 0 ? a : b).Add(all[i]);
    b.Merge(a);
    EXPECT_EQ(b.Finish(), base);
  }
}

TEST(ExactSum, ExactAndOrderFree) {
  ExactSum a, b;
  const std::vector<double> values = {1.0, 1e-30, 1.0 / 3.0, 0.1, 0.7, 1e-17, 0.5};
  for (double v : values) a.Add(v);
  for (auto it = values.rbegin(); it != values.rend(); ++it) b.Add(*it);
  EXPECT_EQ(a.ToDouble(), b.ToDouble());
  ExactSum tenths;
  for (int i = 0; i < 10; ++i) tenths.Add(0.1);
  EXPECT_EQ(tenths.ToDouble(), 1.0);  // naive summation gives 0.9999999999999999
  EXPECT_THROW(a.Add(1.5), std::invalid_argument);
  EXPECT_THROW(a.Add(-0.1), std::invalid_argument);
}

TEST(Percent, HalfToEvenOneDecimal) {
  EXPECT_EQ(PercentOneDecimal(1, 3), 33.3);
  EXPECT_EQ(PercentOneDecimal(2, 3), 66.7);
  EXPECT_EQ(PercentOneDecimal(1, 2000), 0.0);   // 0.05 -> 0.0
  EXPECT_EQ(PercentOneDecimal(3, 2000), 0.2);   // 0.15 -> 0.2
  EXPECT_EQ(PercentOneDecimal(1, 1), 100.0);
  EXPECT_EQ(PercentOneDecimal(0.793), 79.3);
  EXPECT_THROW(PercentOneDecimal(1, 0), std::invalid_argument);
}

TEST(GoldStats, AveragesAndPrecision) {
  std::vector<Example> ds = {
      MakeExample("a", Annotate("Obama met Merkel.", {}), Annotate("Obama met Putin.", {"Obama", "Putin"})),
      MakeExample("b", Annotate("Paris", {}), Annotate("Paris.", {"Paris"})),
      MakeExample("c", Annotate("Nothing here.", {}), Annotate("Prices rose.", {})),
  };
  const auto s = ComputeGoldCorpusStats(ds);
  EXPECT_EQ(s.examples, 3u);
  EXPECT_EQ(s.n_t, 3u);
  EXPECT_EQ(s.n_t_in_s, 2u);
  EXPECT_DOUBLE_EQ(s.avg_n_t, 1.0);
  EXPECT_DOUBLE_EQ(s.avg_n_t_in_s, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*s.prec_s, 2.0 / 3.0);
  EXPECT_THROW(ComputeGoldCorpusStats(std::span<const Example>()), std::invalid_argument);
}

// The checked-in expectation comes from tests/oracles/recount.py.
TEST(Metrics, PlantedFixtureMatchesOracle) {
  const auto corpus = LoadCorpus(FAITHFUL_FIXTURES_DIR "/planted/dataset.jsonl",
                                 FAITHFUL_FIXTURES_DIR "/planted/annotations.jsonl");
  std::ifstream in(FAITHFUL_FIXTURES_DIR "/planted/expected.json");
  const auto expected = nlohmann::json::parse(in);
  ASSERT_EQ(corpus.size(), expected["per_example"].size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto &want = expected["per_example"][i];
    const auto c = CountMatches(corpus[i]);
    EXPECT_EQ(c.n_h, want["counts"]["n_h"]) << corpus[i].id;
    EXPECT_EQ(c.n_h_in_s, want["counts"]["n_h_in_s"]) << corpus[i].id;
    EXPECT_EQ(c.n_h_in_t, want["counts"]["n_h_in_t"]) << corpus[i].id;
    EXPECT_EQ(c.n_t, want["counts"]["n_t"]) << corpus[i].id;
    EXPECT_EQ(c.n_t_in_s, want["counts"]["n_t_in_s"]) << corpus[i].id;
  }
}

}  // namespace
}  // namespace faithful
