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

#ifndef FAITHFUL_TOKENIZER_H_
#define FAITHFUL_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "faithful/types.h"

namespace faithful {

// Whitespace tokenizer with punctuation splitting.
//
// Text is cut into maximal runs of non-whitespace. Within a run, leading
// punctuation characters become single-character tokens. Trailing material is
// then peeled off from the right, one piece at a time, until the remainder is
// an initialism such as "U.K." or "e.g." (letter-period pairs, at least two):
//   - a trailing punctuation character becomes its own token;
//   - otherwise a trailing clitic 's ('S, ’s) becomes one token, provided
//     something is left in front of it.
// Whatever remains is a single token, internal punctuation included
// ("co-operate", "3.5", "don't").
//
// Every non-whitespace character lands in exactly one token; spans are sorted
// and disjoint.
std::vector<Span> Tokenize(std::u32string_view text);
std::vector<Span> Tokenize(const Utf8Text &text);

// Convenience for callers holding UTF-8: the token strings themselves.
std::vector<std::string> TokenizeToStrings(std::string_view text);

}  // namespace faithful

#endif  // FAITHFUL_TOKENIZER_H_
