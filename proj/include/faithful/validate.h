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

#ifndef FAITHFUL_VALIDATE_H_
#define FAITHFUL_VALIDATE_H_

#include <optional>
#include <string>
#include <vector>

#include "faithful/types.h"

namespace faithful {

enum class Severity { kError, kWarning };

struct Finding {
  Severity severity = Severity::kError;
  std::string field;  // "id", "source", "summary" or "hypothesis"
  std::string part;   // "token", "sentence", "entity" or empty
  std::optional<std::size_t> index;
  std::optional<std::size_t> offset;  // code point the problem was found at
  std::string message;

  bool is_error() const { return severity == Severity::kError; }
  std::string ToString() const;
  bool operator==(const Finding &) const = default;
};

// Checks every span invariant of the example. Findings are ordered by field
// (source, summary, hypothesis), then by part (tokens, sentences, entities),
// then by index. An entity that starts inside a sentence but runs past its
// end is a warning (it belongs to the sentence holding its first character);
// everything else is an error.
std::vector<Finding> ValidateExample(const Example &example);

// Findings for a single text; `field` is copied into each finding.
std::vector<Finding> ValidateAnnotatedText(const AnnotatedText &text, const std::string &field);

bool HasErrors(const std::vector<Finding> &findings);

}  // namespace faithful

#endif  // FAITHFUL_VALIDATE_H_
