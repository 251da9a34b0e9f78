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

#include "faithful/training_prep.h"

#include <algorithm>
#include <set>

namespace faithful {

namespace {

std::string Trim(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && IsWhitespace(cps[b])) ++b;
  while (e > b && IsWhitespace(cps[e - 1])) --e;
  return EncodeUtf8(std::u32string_view(cps).substr(b, e - b));
}

// The delimiter as searched for: its trimmed form, so that "A;B" and
// "A ; B" both split, unless it is pure whitespace.
std::string SplitDelimiter(const JaensConfig &config) {
  std::string trimmed = Trim(config.entity_delimiter);
  return trimmed.empty() ? config.entity_delimiter : trimmed;
}

}  // namespace

SalientEntitySet SalientEntities(const Example &example, bool dedupe, const Matcher &matcher) {
  std::vector<const EntitySpan *> ordered;
  for (const EntitySpan &e : example.summary.entities()) ordered.push_back(&e);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const EntitySpan *a, const EntitySpan *b) { return a->span < b->span; });

  SalientEntitySet out;
  std::set<std::vector<std::u32string>> seen;
  for (const EntitySpan *e : ordered) {
    MatchResult m = matcher.Find(*e, example.source);
    if (!m.matched) {
      ++out.omitted_unmatched;
      continue;
    }
    if (dedupe && !seen.insert(m.folded_ngram).second) {
      ++out.collapsed_duplicates;
      continue;
    }
    out.entities.push_back({*e, std::move(*m.matched_ngram), std::move(m.folded_ngram), std::move(m.occurrences)});
  }
  return out;
}

SalientEntitySet SalientEntities(const Example &example, bool dedupe) {
  return SalientEntities(example, dedupe, Matcher());
}

BioLabelSequence BioLabels(const Example &example, const SalientEntitySet &salient) {
  struct Claim {
    std::size_t begin;
    std::size_t length;
    bool operator<(const Claim &o) const { return begin != o.begin ? begin < o.begin : length > o.length; }
  };
  std::vector<Claim> claims;
  for (const SalientEntity &s : salient.entities) {
    for (const Occurrence &occ : s.occurrences) claims.push_back({occ.first_token, s.folded_ngram.size()});
  }
  std::sort(claims.begin(), claims.end());

  const std::size_t n = example.source.tokens().size();
  BioLabelSequence labels(n, BioLabel::kOutside);
  std::vector<bool> taken(n, false);
  for (const Claim &c : claims) {
    if (c.length == 0 || c.begin + c.length > n) continue;
    const bool free = std::none_of(taken.begin() + c.begin, taken.begin() + c.begin + c.length,
                                   [](bool t) { return t; });
    if (!free) continue;
    for (std::size_t k = 0; k < c.length; ++k) {
      taken[c.begin + k] = true;
      labels[c.begin + k] = k == 0 ? BioLabel::kBegin : BioLabel::kInside;
    }
  }
  return labels;
}

BioLabelSequence BioLabels(const Example &example, const Matcher &matcher, bool dedupe) {
  return BioLabels(example, SalientEntities(example, dedupe, matcher));
}

std::vector<std::pair<std::size_t, std::size_t>> DecodeBioRuns(const BioLabelSequence &labels) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != BioLabel::kBegin) continue;
    std::size_t j = i + 1;
    while (j < labels.size() && labels[j] == BioLabel::kInside) ++j;
    runs.emplace_back(i, j);
  }
  return runs;
}

std::vector<std::string> JaensSurfaces(const SalientEntitySet &salient) {
  std::vector<std::string> out;
  out.reserve(salient.entities.size());
  for (const SalientEntity &s : salient.entities) out.push_back(Trim(s.mention.surface));
  return out;
}

std::string BuildJaensTarget(std::span<const std::string> entity_surfaces, std::string_view summary,
                             const JaensConfig &config) {
  const std::string &boundary = config.boundary_token;
  if (boundary.empty()) throw JaensError("boundary token must not be empty");
  if (summary.find(boundary) != std::string_view::npos) {
    throw JaensError("boundary token \"" + boundary + "\" occurs in summary \"" + std::string(summary) + "\"");
  }
  const std::string delimiter = SplitDelimiter(config);

  std::string target;
  std::vector<std::string> kept;
  bool first = true;
  for (const std::string &raw : entity_surfaces) {
    const std::string surface = Trim(raw);
    if (surface.find(boundary) != std::string::npos) {
      throw JaensError("boundary token \"" + boundary + "\" occurs in entity \"" + surface + "\"");
    }
    if (!delimiter.empty() && surface.find(delimiter) != std::string::npos) {
      throw JaensError("entity delimiter \"" + delimiter + "\" occurs in entity \"" + surface + "\"");
    }
    if (surface.empty()) continue;
    if (!first) target += config.entity_delimiter;
    target += surface;
    kept.push_back(surface);
    first = false;
  }
  if (!first) target.push_back(' ');
  // A boundary spelled across two joined surfaces would split early.
  if (!target.empty() && (target + boundary).find(boundary) != target.size()) {
    throw JaensError("boundary token \"" + boundary + "\" forms across the entity list \"" + target + "\"");
  }
  target += boundary;
  target.push_back(' ');
  target += summary;
  if (ParseJaensOutput(target, config).entities != kept) {
    throw JaensError("entity list \"" + target.substr(0, target.size() - summary.size()) +
                     "\" does not split back into its entities with delimiter \"" + config.entity_delimiter + "\"");
  }
  return target;
}

std::string BuildJaensTarget(const Example &example, const SalientEntitySet &salient, const JaensConfig &config) {
  const std::vector<std::string> surfaces = JaensSurfaces(salient);
  return BuildJaensTarget(surfaces, example.summary.str(), config);
}

ParsedJaens ParseJaensOutput(std::string_view text, const JaensConfig &config) {
  ParsedJaens out;
  const std::string &boundary = config.boundary_token;
  const std::size_t at = boundary.empty() ? std::string_view::npos : text.find(boundary);
  if (at == std::string_view::npos) {
    out.summary = std::string(text);
    return out;
  }
  out.boundary_found = true;
  std::string_view prefix = text.substr(0, at);
  std::string_view rest = text.substr(at + boundary.size());
  if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  out.summary = std::string(rest);

  const std::string delimiter = SplitDelimiter(config);
  std::size_t pos = 0;
  while (pos <= prefix.size()) {
    std::size_t next = delimiter.empty() ? std::string_view::npos : prefix.find(delimiter, pos);
    if (next == std::string_view::npos) next = prefix.size();
    std::string piece = Trim(prefix.substr(pos, next - pos));
    if (!piece.empty()) out.entities.push_back(std::move(piece));
    pos = next + std::max<std::size_t>(delimiter.size(), 1);
  }
  return out;
}

}  // namespace faithful
