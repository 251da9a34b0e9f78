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

// Domain types shared by every stage of the pipeline. All offsets count
// Unicode scalar values, never bytes.

#ifndef FAITHFUL_TYPES_H_
#define FAITHFUL_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faithful/unicode.h"

namespace faithful {

// Named-entity categories that take part in matching. Everything else a
// recognizer may produce (dates, numerals, money, ...) is dropped on input.
enum class EntityType { kPerson, kFac, kGpe, kOrg, kNorp, kLoc, kEvent };

std::string_view EntityTypeName(EntityType type);

// Exact, case-sensitive lookup of the upper-case label ("PERSON", "GPE", ...).
std::optional<EntityType> ParseEntityType(std::string_view label);

// Half-open code-point range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end > start ? end - start : 0; }
  bool Contains(std::size_t pos) const { return start <= pos && pos < end; }
  bool Covers(const Span &other) const { return start <= other.start && other.end <= end; }

  auto operator<=>(const Span &) const = default;
};

struct EntitySpan {
  Span span;
  std::string surface;
  EntityType type = EntityType::kPerson;

  bool operator==(const EntitySpan &) const = default;
};

// Raw text plus its token, sentence and entity annotations. Immutable once
// built; span integrity is checked by ValidateExample, not here, so that
// broken input can still be reported on.
class AnnotatedText {
 public:
  AnnotatedText() = default;
  AnnotatedText(std::string text, std::vector<Span> tokens, std::vector<Span> sentences,
                std::vector<EntitySpan> entities);

  // Tokens and sentences are synthesized with Tokenize / SegmentSentences.
  static AnnotatedText FromText(std::string text, std::vector<EntitySpan> entities = {});

  const Utf8Text &text() const { return text_; }
  const std::string &str() const { return text_.str(); }
  std::size_t length() const { return text_.size(); }

  const std::vector<Span> &tokens() const { return tokens_; }
  const std::vector<Span> &sentences() const { return sentences_; }
  const std::vector<EntitySpan> &entities() const { return entities_; }

  // Case-folded token strings, parallel to tokens().
  const std::vector<std::u32string> &folded_tokens() const { return folded_tokens_; }

  std::string_view Slice(const Span &span) const { return text_.Slice(span.start, span.end); }

  // Index of the sentence containing code point `pos`, if any.
  std::optional<std::size_t> SentenceOf(std::size_t pos) const;

  bool operator==(const AnnotatedText &other) const;

 private:
  Utf8Text text_;
  std::vector<Span> tokens_;
  std::vector<Span> sentences_;
  std::vector<EntitySpan> entities_;
  std::vector<std::u32string> folded_tokens_;
};

struct Example {
  std::string id;
  AnnotatedText source;
  AnnotatedText summary;  // gold
  std::optional<AnnotatedText> hypothesis;

  bool operator==(const Example &) const = default;
};

// Mention counts for one example (or summed over a corpus).
struct EntityCounts {
  std::uint64_t n_h = 0;       // hypothesis mentions
  std::uint64_t n_t = 0;       // gold mentions
  std::uint64_t n_h_in_s = 0;  // hypothesis mentions matched in the source
  std::uint64_t n_h_in_t = 0;  // hypothesis mentions matched in the gold summary
  std::uint64_t n_t_in_s = 0;  // gold mentions matched in the source
  bool hypothesis_present = true;

  EntityCounts &operator+=(const EntityCounts &other);
  bool IsConsistent() const {
    return n_h_in_s <= n_h && n_h_in_t <= n_h && n_t_in_s <= n_t;
  }
  bool operator==(const EntityCounts &) const = default;
};

// nullopt marks a metric whose denominator is zero.
using MetricValue = std::optional<double>;

struct MetricPair {
  MetricValue macro;
  MetricValue micro;
  bool operator==(const MetricPair &) const = default;
};

struct MetricReport {
  MetricPair prec_s;
  MetricPair prec_t;
  MetricPair recall_t;
  MetricPair f1_t;
  EntityCounts counts;
  std::uint64_t examples_total = 0;
  struct Skipped {
    std::uint64_t prec_s = 0;
    std::uint64_t prec_t = 0;
    std::uint64_t recall_t = 0;
    std::uint64_t f1_t = 0;
    bool operator==(const Skipped &) const = default;
  } examples_skipped;

  bool operator==(const MetricReport &) const = default;
};

// Label values follow the integer encoding written to disk: B=0, I=1, O=2.
enum class BioLabel : std::uint8_t { kBegin = 0, kInside = 1, kOutside = 2 };
using BioLabelSequence = std::vector<BioLabel>;

// True when no I appears at position 0 or directly after an O.
bool IsWellFormedBio(const BioLabelSequence &labels);

struct JaensConfig {
  std::string entity_delimiter = " ; ";
  std::string boundary_token = "<ent-summary-sep>";
  bool dedupe = true;
};

// Multi-task loss weight exported next to prepared data. Nothing in this
// library trains a model; the value is carried for downstream trainers.
struct TrainingPrepMeta {
  double alpha = 0.3;
  std::string dataset_name;

  // Recommended weights: newsroom 0.3, cnndm 0.3, xsum 0.15. Unknown names
  // get 0.3.
  static TrainingPrepMeta ForDataset(std::string_view dataset_name);

  // Throws std::invalid_argument when alpha is outside [0, 1]. Returns a
  // warning when it is outside the tuned range [0.1, 0.5].
  std::optional<std::string> Check() const;
};

}  // namespace faithful

#endif  // FAITHFUL_TYPES_H_
