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

// Entity-based corpus filtering: a gold-summary sentence is removed when any
// entity mention assigned to it has no match in the source, and an example
// whose summary loses every sentence is removed outright. Surviving examples
// have no unmatched gold entities, so their gold prec_s is exactly 1.

#ifndef FAITHFUL_FILTER_H_
#define FAITHFUL_FILTER_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "faithful/match.h"
#include "faithful/types.h"

namespace faithful {

struct DroppedSentence {
  Span sentence;
  std::vector<std::string> offending_entities;  // surfaces without a source match
};

struct FilterOutcome {
  std::vector<Span> kept_sentences;
  std::vector<DroppedSentence> dropped_sentences;
  bool example_dropped = false;
  // The summary as it stands after filtering; absent when the example is
  // dropped. Identical to the input summary when nothing was removed.
  std::optional<AnnotatedText> rewritten_summary;
};

// Entities belong to the sentence holding their first character. Kept
// sentences are joined with a single space and every span is re-offset.
// Source and hypothesis are never touched.
FilterOutcome FilterExample(const Example &example, const Matcher &matcher);
FilterOutcome FilterExample(const Example &example);

// The example with its summary replaced, or nullopt if it was dropped.
std::optional<Example> ApplyFilterOutcome(Example example, FilterOutcome outcome);

struct FilterStats {
  std::uint64_t examples_before = 0;
  std::uint64_t examples_after = 0;
  std::uint64_t sentences_before = 0;
  std::uint64_t sentences_after = 0;
  std::optional<double> avg_sentences_before;  // over examples_before
  std::optional<double> avg_sentences_after;   // over examples_after
};

class FilterStatsAccumulator {
 public:
  void Add(const Example &original, const FilterOutcome &outcome);
  void Merge(const FilterStatsAccumulator &other);
  FilterStats Finish() const;

 private:
  FilterStats stats_;
};

// Throws std::invalid_argument for an empty dataset.
std::pair<std::vector<Example>, FilterStats> FilterCorpus(std::span<const Example> dataset, const Matcher &matcher);
std::pair<std::vector<Example>, FilterStats> FilterCorpus(std::span<const Example> dataset);

}  // namespace faithful

#endif  // FAITHFUL_FILTER_H_
