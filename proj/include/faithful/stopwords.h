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

#ifndef FAITHFUL_STOPWORDS_H_
#define FAITHFUL_STOPWORDS_H_

#include <string>
#include <string_view>
#include <unordered_set>

namespace faithful {

// Bumped whenever resources/stopwords.txt changes.
inline constexpr std::string_view kStopwordsVersion = "en-179-v1";

// Case-folded English function words. Membership is tested on folded tokens.
class StopwordList {
 public:
  StopwordList() = default;

  // One word per line; blank lines ignored. Words are case-folded on load.
  static StopwordList FromText(std::string_view text);
  static StopwordList FromFile(const std::string &path);

  // The list compiled from resources/stopwords.txt.
  static const StopwordList &Builtin();

  bool Contains(std::u32string_view folded) const { return words_.count(std::u32string(folded)) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::u32string> words_;
};

}  // namespace faithful

#endif  // FAITHFUL_STOPWORDS_H_
