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

#include "faithful/tokenizer.h"

#include <algorithm>

namespace faithful {

namespace {

bool IsApostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

// "U.K.", "e.g.", "U.S.A." -- at least two letter-period pairs.
bool IsInitialism(std::u32string_view text, std::size_t begin, std::size_t end) {
  const std::size_t n = end - begin;
  if (n < 4 || n % 2 != 0) return false;
  for (std::size_t i = begin; i < end; i += 2) {
    if (!IsLetter(text[i]) || text[i + 1] != U'.') return false;
  }
  return true;
}

void TokenizeChunk(std::u32string_view text, std::size_t begin, std::size_t end, std::vector<Span> *out) {
  while (begin < end && IsPunctuation(text[begin])) {
    out->push_back({begin, begin + 1});
    ++begin;
  }

  std::vector<Span> trailing;  // collected right to left
  while (begin < end) {
    if (IsInitialism(text, begin, end)) break;
    if (IsPunctuation(text[end - 1])) {
      trailing.push_back({end - 1, end});
      --end;
      continue;
    }
    if (end - begin > 2 && IsApostrophe(text[end - 2]) && (text[end - 1] == U's' || text[end - 1] == U'S')) {
      trailing.push_back({end - 2, end});
      end -= 2;
      continue;
    }
    break;
  }

  if (begin < end) out->push_back({begin, end});
  out->insert(out->end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

std::vector<Span> Tokenize(std::u32string_view text) {
  std::vector<Span> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsWhitespace(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !IsWhitespace(text[j])) ++j;
    TokenizeChunk(text, i, j, &tokens);
    i = j;
  }
  return tokens;
}

std::vector<Span> Tokenize(const Utf8Text &text) { return Tokenize(text.code_points()); }

std::vector<std::string> TokenizeToStrings(std::string_view text) {
  Utf8Text decoded{std::string(text)};
  std::vector<std::string> out;
  for (const Span &s : Tokenize(decoded)) out.emplace_back(decoded.Slice(s.start, s.end));
  return out;
}

}  // namespace faithful
