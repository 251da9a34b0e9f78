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

#include "faithful/stopwords.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "faithful/unicode.h"

namespace faithful {

namespace internal {
extern const std::string_view kBuiltinStopwordsText;
}  // namespace internal

StopwordList StopwordList::FromText(std::string_view text) {
  StopwordList list;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::u32string word = DecodeUtf8(text.substr(pos, nl - pos));
    while (!word.empty() && IsWhitespace(word.back())) word.pop_back();
    std::size_t lead = 0;
    while (lead < word.size() && IsWhitespace(word[lead])) ++lead;
    word.erase(0, lead);
    if (!word.empty()) list.words_.insert(SimpleFold(word));
    pos = nl + 1;
  }
  return list;
}

StopwordList StopwordList::FromFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open stopword file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromText(buf.str());
}

const StopwordList &StopwordList::Builtin() {
  static const StopwordList list = FromText(internal::kBuiltinStopwordsText);
  return list;
}

}  // namespace faithful
