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

#include "faithful/sentences.h"

namespace faithful {

namespace {

bool IsTerminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

}  // namespace

std::vector<Span> SegmentSentences(std::u32string_view text) {
  std::vector<Span> sentences;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    while (i < n && IsWhitespace(text[i])) ++i;
    if (i == n) break;
    const std::size_t start = i;
    std::size_t last_nonspace = i;
    std::size_t end = n;
    for (; i < n; ++i) {
      if (!IsWhitespace(text[i])) last_nonspace = i;
      if (!IsTerminal(text[i])) continue;
      std::size_t k = i + 1;
      if (k < n && !IsWhitespace(text[k])) continue;
      while (k < n && IsWhitespace(text[k])) ++k;
      if (k == n || IsUppercase(text[k])) {
        end = i + 1;
        ++i;
        break;
      }
    }
    if (end == n) end = last_nonspace + 1;
    sentences.push_back({start, end});
  }
  return sentences;
}

std::vector<Span> SegmentSentences(std::u32string_view text, const std::optional<std::vector<Span>> &supplied) {
  if (supplied) return *supplied;
  return SegmentSentences(text);
}

}  // namespace faithful
