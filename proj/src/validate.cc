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

#include "faithful/validate.h"

#include <algorithm>
#include <sstream>

namespace faithful {

namespace {

Finding MakeFinding(Severity severity, const std::string &field, const char *part, std::size_t index,
                    std::size_t offset, std::string message) {
  return Finding{severity, field, part, index, offset, std::move(message)};
}

void CheckOrderedSpans(const std::vector<Span> &spans, std::size_t length, const std::string &field,
                       const char *part, std::vector<Finding> *out) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const Span &s = spans[i];
    if (s.start >= s.end) {
      out->push_back(MakeFinding(Severity::kError, field, part, i, s.start, "empty or inverted span"));
    } else if (s.end > length) {
      out->push_back(MakeFinding(Severity::kError, field, part, i, s.end,
                                 "span ends at " + std::to_string(s.end) + " beyond text length " +
                                     std::to_string(length)));
    }
    if (i > 0 && s.start < spans[i - 1].end) {
      out->push_back(
          MakeFinding(Severity::kError, field, part, i, s.start, "overlaps or precedes the previous span"));
    }
  }
}

}  // namespace

std::string Finding::ToString() const {
  std::ostringstream os;
  os << (severity == Severity::kError ? "error" : "warning") << ": " << field;
  if (!part.empty()) os << '.' << part;
  if (index) os << '[' << *index << ']';
  if (offset) os << " at offset " << *offset;
  os << ": " << message;
  return os.str();
}

std::vector<Finding> ValidateAnnotatedText(const AnnotatedText &text, const std::string &field) {
  std::vector<Finding> out;
  const std::size_t length = text.length();
  CheckOrderedSpans(text.tokens(), length, field, "token", &out);
  CheckOrderedSpans(text.sentences(), length, field, "sentence", &out);
  // Sentence assignment is meaningless if the sentences themselves are broken.
  const bool sentences_ok =
      std::none_of(out.begin(), out.end(), [](const Finding &f) { return f.is_error() && f.part == "sentence"; });

  const auto &entities = text.entities();
  for (std::size_t i = 0; i < entities.size(); ++i) {
    const Span &s = entities[i].span;
    if (s.start >= s.end) {
      out.push_back(MakeFinding(Severity::kError, field, "entity", i, s.start, "empty or inverted span"));
      continue;
    }
    if (s.end > length) {
      out.push_back(MakeFinding(Severity::kError, field, "entity", i, s.end,
                                "span ends at " + std::to_string(s.end) + " beyond text length " +
                                    std::to_string(length)));
      continue;
    }
    if (text.Slice(s) != entities[i].surface) {
      out.push_back(MakeFinding(Severity::kError, field, "entity", i, s.start,
                                "surface \"" + entities[i].surface + "\" differs from text \"" +
                                    std::string(text.Slice(s)) + "\""));
      continue;
    }
    if (!sentences_ok) continue;
    auto sentence = text.SentenceOf(s.start);
    if (!sentence) {
      out.push_back(MakeFinding(Severity::kError, field, "entity", i, s.start, "starts outside every sentence"));
    } else if (!text.sentences()[*sentence].Covers(s)) {
      out.push_back(MakeFinding(Severity::kWarning, field, "entity", i, s.start,
                                "straddles a sentence boundary; assigned to sentence " + std::to_string(*sentence)));
    }
  }
  return out;
}

std::vector<Finding> ValidateExample(const Example &example) {
  std::vector<Finding> out;
  if (example.id.empty()) out.push_back(Finding{Severity::kError, "id", "", {}, {}, "empty id"});
  auto append = [&out](std::vector<Finding> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(ValidateAnnotatedText(example.source, "source"));
  append(ValidateAnnotatedText(example.summary, "summary"));
  if (example.hypothesis) append(ValidateAnnotatedText(*example.hypothesis, "hypothesis"));
  return out;
}

bool HasErrors(const std::vector<Finding> &findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding &f) { return f.is_error(); });
}

}  // namespace faithful
