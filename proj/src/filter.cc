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

#include "faithful/filter.h"

#include <algorithm>
#include <stdexcept>

namespace faithful {

namespace {

// Rebuilds the summary from the kept sentences. A kept sentence contributes
// the text from its start to the furthest end of the sentence itself or any
// entity/token assigned to it, so straddling spans stay intact.
AnnotatedText Rewrite(const AnnotatedText &summary, const std::vector<bool> &keep) {
  const auto &sentences = summary.sentences();
  std::vector<std::size_t> segment_end(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) segment_end[i] = sentences[i].end;

  std::vector<std::optional<std::size_t>> token_owner;
  token_owner.reserve(summary.tokens().size());
  for (const Span &t : summary.tokens()) {
    auto owner = summary.SentenceOf(t.start);
    if (owner) segment_end[*owner] = std::max(segment_end[*owner], t.end);
    token_owner.push_back(owner);
  }
  std::vector<std::optional<std::size_t>> entity_owner;
  entity_owner.reserve(summary.entities().size());
  for (const EntitySpan &e : summary.entities()) {
    auto owner = summary.SentenceOf(e.span.start);
    if (owner) segment_end[*owner] = std::max(segment_end[*owner], e.span.end);
    entity_owner.push_back(owner);
  }

  // Kept sentences whose extended coverage runs into the next kept sentence
  // share one verbatim segment.
  std::string text;
  std::vector<std::optional<std::size_t>> shift_base(sentences.size());  // new offset minus old offset, mod 2^64
  std::vector<Span> new_sentences;
  std::size_t length = 0;
  std::optional<Span> open;  // original range of the segment being built
  std::size_t open_base = 0;
  auto flush = [&] {
    if (!open) return;
    text.append(summary.Slice(*open));
    length += open->size();
    open.reset();
  };
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!keep[i]) continue;
    if (open && sentences[i].start < open->end) {
      open->end = std::max(open->end, segment_end[i]);
    } else {
      flush();
      if (!new_sentences.empty()) {
        text.push_back(' ');
        ++length;
      }
      open = Span{sentences[i].start, segment_end[i]};
      open_base = length;
    }
    shift_base[i] = open_base - open->start;
    new_sentences.push_back({sentences[i].start + *shift_base[i], sentences[i].end + *shift_base[i]});
  }
  flush();

  auto shift = [&](const Span &s, std::size_t owner) {
    return Span{s.start + *shift_base[owner], s.end + *shift_base[owner]};
  };

  std::vector<Span> tokens;
  for (std::size_t k = 0; k < summary.tokens().size(); ++k) {
    const auto &owner = token_owner[k];
    if (owner && keep[*owner]) tokens.push_back(shift(summary.tokens()[k], *owner));
  }
  std::vector<EntitySpan> entities;
  for (std::size_t k = 0; k < summary.entities().size(); ++k) {
    const auto &owner = entity_owner[k];
    if (!owner || !keep[*owner]) continue;
    EntitySpan e = summary.entities()[k];
    e.span = shift(e.span, *owner);
    entities.push_back(std::move(e));
  }
  return AnnotatedText(std::move(text), std::move(tokens), std::move(new_sentences), std::move(entities));
}

}  // namespace

FilterOutcome FilterExample(const Example &example, const Matcher &matcher) {
  const AnnotatedText &summary = example.summary;
  const auto &sentences = summary.sentences();
  std::vector<std::vector<std::string>> offending(sentences.size());

  for (const EntitySpan &e : summary.entities()) {
    if (matcher.Find(e, example.source).matched) continue;
    auto owner = summary.SentenceOf(e.span.start);
    if (!owner) {
      // Only reachable on unvalidated input: an unowned entity poisons the
      // whole summary.
      for (auto &list : offending) list.push_back(e.surface);
      continue;
    }
    offending[*owner].push_back(e.surface);
  }

  FilterOutcome out;
  std::vector<bool> keep(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    keep[i] = offending[i].empty();
    if (keep[i]) {
      out.kept_sentences.push_back(sentences[i]);
    } else {
      out.dropped_sentences.push_back({sentences[i], std::move(offending[i])});
    }
  }
  out.example_dropped = out.kept_sentences.empty();
  if (out.example_dropped) return out;
  if (out.dropped_sentences.empty()) {
    out.rewritten_summary = summary;
  } else {
    out.rewritten_summary = Rewrite(summary, keep);
  }
  return out;
}

FilterOutcome FilterExample(const Example &example) { return FilterExample(example, Matcher()); }

std::optional<Example> ApplyFilterOutcome(Example example, FilterOutcome outcome) {
  if (outcome.example_dropped || !outcome.rewritten_summary) return std::nullopt;
  example.summary = std::move(*outcome.rewritten_summary);
  return example;
}

void FilterStatsAccumulator::Add(const Example &original, const FilterOutcome &outcome) {
  ++stats_.examples_before;
  stats_.sentences_before += original.summary.sentences().size();
  if (!outcome.example_dropped) {
    ++stats_.examples_after;
    stats_.sentences_after += outcome.kept_sentences.size();
  }
}

void FilterStatsAccumulator::Merge(const FilterStatsAccumulator &other) {
  stats_.examples_before += other.stats_.examples_before;
  stats_.examples_after += other.stats_.examples_after;
  stats_.sentences_before += other.stats_.sentences_before;
  stats_.sentences_after += other.stats_.sentences_after;
}

FilterStats FilterStatsAccumulator::Finish() const {
  FilterStats s = stats_;
  if (s.examples_before > 0) {
    s.avg_sentences_before = static_cast<double>(s.sentences_before) / static_cast<double>(s.examples_before);
  }
  if (s.examples_after > 0) {
    s.avg_sentences_after = static_cast<double>(s.sentences_after) / static_cast<double>(s.examples_after);
  }
  return s;
}

std::pair<std::vector<Example>, FilterStats> FilterCorpus(std::span<const Example> dataset, const Matcher &matcher) {
  if (dataset.empty()) throw std::invalid_argument("cannot filter an empty dataset");
  std::vector<Example> kept;
  FilterStatsAccumulator acc;
  for (const Example &ex : dataset) {
    FilterOutcome outcome = FilterExample(ex, matcher);
    acc.Add(ex, outcome);
    if (auto filtered = ApplyFilterOutcome(ex, std::move(outcome))) kept.push_back(std::move(*filtered));
  }
  return {std::move(kept), acc.Finish()};
}

std::pair<std::vector<Example>, FilterStats> FilterCorpus(std::span<const Example> dataset) {
  return FilterCorpus(dataset, Matcher());
}

}  // namespace faithful
