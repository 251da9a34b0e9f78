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

// Entity-to-text matching.
//
// An entity matches a text when some contiguous n-gram of the entity's tokens
// occurs as a contiguous run of the text's tokens, comparing case-folded
// tokens. Candidates are tried longest first and, within a length, left to
// right across the entity; the first one found wins and all of its
// occurrences in the text are reported. A single-token candidate is never
// accepted on its own if it is a stopword, or if it reduces to a stopword or
// to nothing once punctuation is removed ("the", ".", "'s").
//
// Matching is over tokens, not characters: "art" never matches "Barack".

#ifndef FAITHFUL_MATCH_H_
#define FAITHFUL_MATCH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faithful/stopwords.h"
#include "faithful/types.h"

namespace faithful {

struct Occurrence {
  Span span;                    // characters in the haystack
  std::size_t first_token = 0;  // index into the haystack's tokens

  bool operator==(const Occurrence &) const = default;
};

struct MatchResult {
  bool matched = false;
  // Entity tokens of the winning n-gram, as written in the entity.
  std::optional<std::vector<std::string>> matched_ngram;
  std::vector<std::u32string> folded_ngram;
  std::size_t ngram_begin = 0;  // token offset of the n-gram inside the entity
  std::vector<Occurrence> occurrences;

  std::size_t ngram_length() const { return folded_ngram.size(); }
};

class Matcher {
 public:
  explicit Matcher(const StopwordList &stopwords = StopwordList::Builtin()) : stopwords_(&stopwords) {}

  // Throws std::invalid_argument("empty entity") when the surface has no
  // tokens.
  MatchResult Find(std::string_view entity_surface, const AnnotatedText &haystack) const;
  MatchResult Find(const EntitySpan &entity, const AnnotatedText &haystack) const {
    return Find(entity.surface, haystack);
  }

  // Same search over pre-folded tokens. Occurrence spans are left as token
  // index ranges [first_token, first_token + n) since no text is attached.
  MatchResult FindFolded(std::span<const std::u32string> entity_tokens,
                         std::span<const std::u32string> haystack_tokens) const;

  // Whether a single folded token may not stand as a match by itself.
  bool IsGuardedUnigram(std::u32string_view folded_token) const;

  const StopwordList &stopwords() const { return *stopwords_; }

 private:
  const StopwordList *stopwords_;
};

// Uses the built-in stopword list.
MatchResult FindMatch(const EntitySpan &entity, const AnnotatedText &haystack);

}  // namespace faithful

#endif  // FAITHFUL_MATCH_H_
