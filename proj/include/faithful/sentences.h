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

#ifndef FAITHFUL_SENTENCES_H_
#define FAITHFUL_SENTENCES_H_

#include <optional>
#include <string_view>
#include <vector>

#include "faithful/types.h"

namespace faithful {

// Fallback sentence splitter. A sentence ends after '.', '!' or '?' when the
// next character is whitespace and the next non-whitespace character is an
// upper-case letter, or when only whitespace remains. Sentence spans are
// trimmed of surrounding whitespace and together cover every non-whitespace
// character. This is approximate ("Dr. Smith" splits); annotator-supplied
// sentences should be preferred.
std::vector<Span> SegmentSentences(std::u32string_view text);

// Returns `supplied` verbatim when present, the fallback split otherwise.
std::vector<Span> SegmentSentences(std::u32string_view text, const std::optional<std::vector<Span>> &supplied);

}  // namespace faithful

#endif  // FAITHFUL_SENTENCES_H_
