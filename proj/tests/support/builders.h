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

#ifndef FAITHFUL_TESTS_SUPPORT_BUILDERS_H_
#define FAITHFUL_TESTS_SUPPORT_BUILDERS_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "faithful/types.h"
#include "faithful/unicode.h"

namespace faithful::testing {

// Locates each surface in order, each search starting after the previous
// entity, and synthesizes tokens and sentences.
inline AnnotatedText Annotate(const std::string &text, const std::vector<std::string> &surfaces,
                              EntityType type = EntityType::kPerson) {
  const std::u32string cps = DecodeUtf8(text);
  std::vector<EntitySpan> entities;
  std::size_t from = 0;
  for (const std::string &surface : surfaces) {
    const std::u32string needle = DecodeUtf8(surface);
    const std::size_t at = cps.find(needle, from);
    if (at == std::u32string::npos) throw std::logic_error("surface not found: " + surface);
    entities.push_back({{at, at + needle.size()}, surface, type});
    from = at + needle.size();
  }
  return AnnotatedText::FromText(text, std::move(entities));
}

inline Example MakeExample(std::string id, const AnnotatedText &source, const AnnotatedText &summary,
                           std::optional<AnnotatedText> hypothesis = std::nullopt) {
  Example ex;
  ex.id = std::move(id);
  ex.source = source;
  ex.summary = summary;
  ex.hypothesis = std::move(hypothesis);
  return ex;
}

inline std::vector<std::string> Slices(const AnnotatedText &text, const std::vector<Span> &spans) {
  std::vector<std::string> out;
  for (const Span &s : spans) out.emplace_back(text.Slice(s));
  return out;
}

}  // namespace faithful::testing

#endif  // FAITHFUL_TESTS_SUPPORT_BUILDERS_H_
