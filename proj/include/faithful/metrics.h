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

// Entity-level consistency metrics.
//
//   prec_s   = N(h in s) / N(h)   hypothesis mentions found in the source
//   prec_t   = N(h in t) / N(h)   hypothesis mentions found in the gold summary
//   recall_t = N(h in t) / N(t)
//   f1_t     = 2 prec_t recall_t / (prec_t + recall_t)
//
// Counts are over mentions. A zero denominator makes the metric undefined
// (nullopt); f1_t is undefined when either input is undefined or both are 0.
// Macro averages skip undefined examples and report how many were skipped;
// micro averages divide summed numerators by summed denominators.

#ifndef FAITHFUL_METRICS_H_
#define FAITHFUL_METRICS_H_

#include <array>
#include <cstdint>
#include <span>

#include "faithful/match.h"
#include "faithful/types.h"

namespace faithful {

struct ExampleMetrics {
  MetricValue prec_s;
  MetricValue prec_t;
  MetricValue recall_t;
  MetricValue f1_t;
};

// An absent hypothesis contributes no hypothesis mentions and clears
// hypothesis_present.
EntityCounts CountMatches(const Example &example, const Matcher &matcher);
EntityCounts CountMatches(const Example &example);

// Only the gold-side counters (n_t, n_t_in_s); hypothesis fields stay zero.
EntityCounts CountGoldMatches(const Example &example, const Matcher &matcher);

MetricValue Ratio(std::uint64_t numerator, std::uint64_t denominator);
MetricValue F1(MetricValue precision, MetricValue recall);
ExampleMetrics ComputeMetrics(const EntityCounts &counts);

// Order-independent sum of values in [0, 1]. Values are accumulated exactly
// in 256-bit fixed point, so any permutation of the inputs yields the same
// bits.
class ExactSum {
 public:
  void Add(double value);
  void Merge(const ExactSum &other);
  double ToDouble() const;

 private:
  std::array<std::uint64_t, 4> limbs_{};  // little-endian, 192 fraction bits
};

// Streaming corpus reduction. Add() in any order; Finish() is deterministic.
class CorpusAggregator {
 public:
  void Add(const EntityCounts &counts);
  void Merge(const CorpusAggregator &other);

  // Throws std::invalid_argument if nothing was added.
  MetricReport Finish() const;

  std::uint64_t size() const { return examples_; }

 private:
  struct MacroState {
    ExactSum sum;
    std::uint64_t defined = 0;
  };
  void AddValue(MacroState *state, const MetricValue &value);

  EntityCounts totals_{};
  std::uint64_t examples_ = 0;
  std::uint64_t with_hypothesis_ = 0;
  MacroState prec_s_, prec_t_, recall_t_, f1_t_;
};

MetricReport AggregateCorpus(std::span<const EntityCounts> counts);

// Gold summaries scored as if they were the hypothesis.
struct GoldCorpusStats {
  std::uint64_t examples = 0;
  std::uint64_t n_t = 0;
  std::uint64_t n_t_in_s = 0;
  double avg_n_t = 0.0;
  double avg_n_t_in_s = 0.0;
  MetricValue prec_s;  // micro: n_t_in_s / n_t
};

class GoldStatsAccumulator {
 public:
  void Add(const EntityCounts &counts);
  void Merge(const GoldStatsAccumulator &other);
  // Throws std::invalid_argument for an empty dataset.
  GoldCorpusStats Finish() const;

 private:
  std::uint64_t examples_ = 0;
  std::uint64_t n_t_ = 0;
  std::uint64_t n_t_in_s_ = 0;
};

GoldCorpusStats ComputeGoldCorpusStats(std::span<const Example> dataset, const Matcher &matcher);
GoldCorpusStats ComputeGoldCorpusStats(std::span<const Example> dataset);

// Percentage rounded half-to-even to one decimal, for presentation only.
double PercentOneDecimal(double fraction);
// Exact variant for a ratio of counts.
double PercentOneDecimal(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace faithful

#endif  // FAITHFUL_METRICS_H_
