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

#include "faithful/match.h"

#include <algorithm>
#include <stdexcept>

#include "faithful/tokenizer.h"

namespace faithful {

namespace {

bool RunEquals(std::span<const std::u32string> needle, std::span<const std::u32string> hay, std::size_t at) {
  for (std::size_t k = 0; k < needle.size(); ++k) {
    if (hay[at + k] != needle[k]) return false;
  }
  return true;
}

}  // namespace

bool Matcher::IsGuardedUnigram(std::u32string_view folded_token) const {
  if (stopwords_->Contains(folded_token)) return true;
  std::u32string word;
  for (char32_t c : folded_token) {
    if (!IsPunctuation(c)) word.push_back(c);
  }
  return word.empty() || stopwords_->Contains(word);
}

MatchResult Matcher::FindFolded(std::span<const std::u32string> entity_tokens,
                                std::span<const std::u32string> haystack_tokens) const {
  if (entity_tokens.empty()) throw std::invalid_argument("empty entity");
  MatchResult result;
  const std::size_t len = entity_tokens.size();
  const std::size_t hay = haystack_tokens.size();
  for (std::size_t n = std::min(len, hay); n >= 1; --n) {
    for (std::size_t begin = 0; begin + n <= len; ++begin) {
      auto needle = entity_tokens.subspan(begin, n);
      if (n == 1 && IsGuardedUnigram(needle[0])) continue;
      for (std::size_t at = 0; at + n <= hay; ++at) {
        if (RunEquals(needle, haystack_tokens, at)) result.occurrences.push_back({{at, at + n}, at});
      }
      if (!result.occurrences.empty()) {
        result.matched = true;
        result.ngram_begin = begin;
        result.folded_ngram.assign(needle.begin(), needle.end());
        return result;
      }
    }
  }
  return result;
}

MatchResult Matcher::Find(std::string_view entity_surface, const AnnotatedText &haystack) const {
  Utf8Text entity{std::string(entity_surface)};
  const std::vector<Span> spans = Tokenize(entity);
  if (spans.empty()) throw std::invalid_argument("empty entity");
  std::vector<std::u32string> folded;
  folded.reserve(spans.size());
  for (const Span &s : spans) {
    folded.push_back(SimpleFold(std::u32string_view(entity.code_points()).substr(s.start, s.size())));
  }

  MatchResult result = FindFolded(folded, haystack.folded_tokens());
  if (!result.matched) return result;

  std::vector<std::string> ngram;
  for (std::size_t k = 0; k < result.ngram_length(); ++k) {
    const Span &s = spans[result.ngram_begin + k];
    ngram.emplace_back(entity.Slice(s.start, s.end));
  }
  result.matched_ngram = std::move(ngram);

  const auto &tokens = haystack.tokens();
  const std::size_t n = result.ngram_length();
  for (Occurrence &occ : result.occurrences) {
    occ.span = {tokens[occ.first_token].start, tokens[occ.first_token + n - 1].end};
  }
  return result;
}

MatchResult FindMatch(const EntitySpan &entity, const AnnotatedText &haystack) {
  static const Matcher matcher;
  return matcher.Find(entity, haystack);
}

}  // namespace faithful
