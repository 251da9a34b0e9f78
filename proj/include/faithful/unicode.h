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

#ifndef FAITHFUL_UNICODE_H_
#define FAITHFUL_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace faithful {

// Decodes UTF-8 into Unicode scalar values. Throws std::invalid_argument on
// ill-formed input (overlongs, surrogates and truncated sequences included).
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string* out);

// Unicode White_Space property.
bool IsWhitespace(char32_t cp);

// General category P* (connector, dash, open, close, initial, final, other).
bool IsPunctuation(char32_t cp);

// Lu or Lt.
bool IsUppercase(char32_t cp);

bool IsLetter(char32_t cp);
bool IsAlphanumeric(char32_t cp);

// Unicode simple case folding (CaseFolding.txt statuses C and S).
char32_t SimpleFold(char32_t cp);
std::u32string SimpleFold(std::u32string_view text);
std::string FoldUtf8(std::string_view text);

// A UTF-8 string together with the byte offset of every code point, so that
// code-point spans can be sliced without re-decoding.
class Utf8Text {
 public:
  Utf8Text() = default;
  explicit Utf8Text(std::string text);

  const std::string &str() const { return text_; }
  const std::u32string &code_points() const { return code_points_; }

  // Length in code points.
  std::size_t size() const { return code_points_.size(); }
  bool empty() const { return code_points_.empty(); }

  // Code-point range [begin, end) as a view into the UTF-8 bytes.
  std::string_view Slice(std::size_t begin, std::size_t end) const;

  bool operator==(const Utf8Text &other) const { return text_ == other.text_; }

 private:
  std::string text_;
  std::u32string code_points_;
  std::vector<std::size_t> byte_offsets_;  // size() + 1 entries
};

}  // namespace faithful

#endif  // FAITHFUL_UNICODE_H_
