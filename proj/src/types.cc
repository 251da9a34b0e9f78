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

#include "faithful/types.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "faithful/sentences.h"
#include "faithful/tokenizer.h"

namespace faithful {

namespace {

constexpr std::array<std::pair<EntityType, std::string_view>, 7> kEntityTypeNames = {{
    {EntityType::kPerson, "PERSON"},
    {EntityType::kFac, "FAC"},
    {EntityType::kGpe, "GPE"},
    {EntityType::kOrg, "ORG"},
    {EntityType::kNorp, "NORP"},
    {EntityType::kLoc, "LOC"},
    {EntityType::kEvent, "EVENT"},
}};

}  // namespace

std::string_view EntityTypeName(EntityType type) {
  for (const auto &[t, name] : kEntityTypeNames) {
    if (t == type) return name;
  }
  return "UNKNOWN";
}

std::optional<EntityType> ParseEntityType(std::string_view label) {
  for (const auto &[t, name] : kEntityTypeNames) {
    if (name == label) return t;
  }
  return std::nullopt;
}

AnnotatedText::AnnotatedText(std::string text, std::vector<Span> tokens, std::vector<Span> sentences,
                             std::vector<EntitySpan> entities)
    : text_(std::move(text)),
      tokens_(std::move(tokens)),
      sentences_(std::move(sentences)),
      entities_(std::move(entities)) {
  folded_tokens_.reserve(tokens_.size());
  const std::u32string &cps = text_.code_points();
  for (const Span &t : tokens_) {
    // Out-of-range tokens fold to nothing; ValidateExample reports them.
    if (t.start >= t.end || t.end > cps.size()) {
      folded_tokens_.emplace_back();
      continue;
    }
    folded_tokens_.push_back(SimpleFold(std::u32string_view(cps).substr(t.start, t.size())));
  }
}

AnnotatedText AnnotatedText::FromText(std::string text, std::vector<EntitySpan> entities) {
  Utf8Text decoded(text);
  auto tokens = Tokenize(decoded.code_points());
  auto sentences = SegmentSentences(decoded.code_points());
  return AnnotatedText(std::move(text), std::move(tokens), std::move(sentences), std::move(entities));
}

std::optional<std::size_t> AnnotatedText::SentenceOf(std::size_t pos) const {
  // Sentences are sorted and disjoint once validated; take the last one that
  // starts at or before pos.
  auto it = std::upper_bound(sentences_.begin(), sentences_.end(), pos,
                             [](std::size_t p, const Span &s) { return p < s.start; });
  if (it == sentences_.begin()) return std::nullopt;
  --it;
  if (!it->Contains(pos)) return std::nullopt;
  return static_cast<std::size_t>(it - sentences_.begin());
}

bool AnnotatedText::operator==(const AnnotatedText &other) const {
  return text_ == other.text_ && tokens_ == other.tokens_ && sentences_ == other.sentences_ &&
         entities_ == other.entities_;
}

EntityCounts &EntityCounts::operator+=(const EntityCounts &other) {
  n_h += other.n_h;
  n_t += other.n_t;
  n_h_in_s += other.n_h_in_s;
  n_h_in_t += other.n_h_in_t;
  n_t_in_s += other.n_t_in_s;
  return *this;
}

bool IsWellFormedBio(const BioLabelSequence &labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != BioLabel::kInside) continue;
    if (i == 0 || labels[i - 1] == BioLabel::kOutside) return false;
  }
  return true;
}

TrainingPrepMeta TrainingPrepMeta::ForDataset(std::string_view dataset_name) {
  TrainingPrepMeta meta;
  meta.dataset_name = std::string(dataset_name);
  std::string lower;
  for (char c : dataset_name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "xsum") {
    meta.alpha = 0.15;
  } else {
    // newsroom, cnndm and anything unrecognized.
    meta.alpha = 0.3;
  }
  return meta;
}

std::optional<std::string> TrainingPrepMeta::Check() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (alpha < 0.1 || alpha > 0.5) {
    return "alpha " + std::to_string(alpha) + " is outside the tuned range [0.1, 0.5]";
  }
  return std::nullopt;
}

}  // namespace faithful
