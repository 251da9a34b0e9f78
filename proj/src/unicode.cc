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

#include "faithful/unicode.h"

#include <unicode/uchar.h>

#include <stdexcept>

namespace faithful {

namespace {

[[noreturn]] void BadUtf8(std::size_t pos) {
  throw std::invalid_argument("ill-formed UTF-8 at byte " + std::to_string(pos));
}

// Decodes one scalar value starting at `pos`, advancing it.
char32_t DecodeOne(std::string_view s, std::size_t *pos) {
  const std::size_t start = *pos;
  const auto lead = static_cast<unsigned char>(s[start]);
  if (lead < 0x80) {
    ++*pos;
    return lead;
  }
  int extra;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    BadUtf8(start);
  }
  if (start + extra >= s.size()) BadUtf8(start);
  for (int i = 1; i <= extra; ++i) {
    const auto c = static_cast<unsigned char>(s[start + i]);
    if ((c & 0xC0) != 0x80) BadUtf8(start);
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) BadUtf8(start);
  *pos = start + extra + 1;
  return cp;
}

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(DecodeOne(text, &pos));
  return out;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendUtf8(cp, &out);
  return out;
}

bool IsWhitespace(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool IsPunctuation(char32_t cp) { return u_ispunct(static_cast<UChar32>(cp)); }

bool IsUppercase(char32_t cp) {
  const auto type = u_charType(static_cast<UChar32>(cp));
  return type == U_UPPERCASE_LETTER || type == U_TITLECASE_LETTER;
}

bool IsLetter(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }

bool IsAlphanumeric(char32_t cp) { return u_isalnum(static_cast<UChar32>(cp)); }

char32_t SimpleFold(char32_t cp) {
  return static_cast<char32_t>(u_foldCase(static_cast<UChar32>(cp), U_FOLD_CASE_DEFAULT));
}

std::u32string SimpleFold(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t &cp : out) cp = SimpleFold(cp);
  return out;
}

std::string FoldUtf8(std::string_view text) { return EncodeUtf8(SimpleFold(DecodeUtf8(text))); }

Utf8Text::Utf8Text(std::string text) : text_(std::move(text)) {
  code_points_.reserve(text_.size());
  byte_offsets_.reserve(text_.size() + 1);
  std::size_t pos = 0;
  while (pos < text_.size()) {
    byte_offsets_.push_back(pos);
    code_points_.push_back(DecodeOne(text_, &pos));
  }
  byte_offsets_.push_back(text_.size());
}

std::string_view Utf8Text::Slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw std::out_of_range("code point slice out of range");
  if (byte_offsets_.empty()) return {};
  return std::string_view(text_).substr(byte_offsets_[begin], byte_offsets_[end] - byte_offsets_[begin]);
}

}  // namespace faithful
