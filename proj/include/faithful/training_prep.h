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

// Training-data preparation: summary-worthy ("salient") source entities,
// per-token BIO labels for them, and joint entity+summary target strings
// together with the parser that splits generated outputs back apart.

#ifndef FAITHFUL_TRAINING_PREP_H_
#define FAITHFUL_TRAINING_PREP_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "faithful/match.h"
#include "faithful/types.h"

namespace faithful {

struct SalientEntity {
  EntitySpan mention;                       // as annotated in the gold summary
  std::vector<std::string> matched_ngram;   // entity tokens found in the source
  std::vector<std::u32string> folded_ngram;
  std::vector<Occurrence> occurrences;      // in the source
};

struct SalientEntitySet {
  std::vector<SalientEntity> entities;  // gold-summary order
  std::uint64_t omitted_unmatched = 0;  // gold mentions with no source match
  std::uint64_t collapsed_duplicates = 0;
};

// Gold mentions that match the source, by order of appearance in the summary.
// With `dedupe`, a mention whose folded matched n-gram was already seen is
// collapsed into the first one.
SalientEntitySet SalientEntities(const Example &example, bool dedupe, const Matcher &matcher);
SalientEntitySet SalientEntities(const Example &example, bool dedupe = true);

// One label per source token. Every occurrence of every salient n-gram is a
// claim; claims are taken by earliest start, then greatest length, and a
// claim touching an already labelled token is discarded whole. A taken
// claim is B on its first token and I on the rest.
BioLabelSequence BioLabels(const Example &example, const SalientEntitySet &salient);
BioLabelSequence BioLabels(const Example &example, const Matcher &matcher, bool dedupe = true);

// Token index ranges [begin, end) of the maximal B I* runs.
std::vector<std::pair<std::size_t, std::size_t>> DecodeBioRuns(const BioLabelSequence &labels);

class JaensError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "<e1><delim><e2>... <boundary> <summary>", or "<boundary> <summary>" with no
// entities. Surfaces are emitted trimmed. Throws JaensError when the boundary
// token is empty or occurs in a surface or in the summary, or when a surface
// contains the entity delimiter.
std::string BuildJaensTarget(std::span<const std::string> entity_surfaces, std::string_view summary,
                             const JaensConfig &config);
std::string BuildJaensTarget(const Example &example, const SalientEntitySet &salient, const JaensConfig &config);

// Surfaces of `salient` as BuildJaensTarget will write them.
std::vector<std::string> JaensSurfaces(const SalientEntitySet &salient);

struct ParsedJaens {
  std::vector<std::string> entities;
  std::string summary;
  bool boundary_found = false;  // false means the whole text became the summary
};

// Inverse of BuildJaensTarget. The text is split at the first boundary
// token; the prefix is split on the delimiter (surrounding whitespace
// ignored, empty pieces dropped) and one separating space after the boundary
// is removed from the summary.
ParsedJaens ParseJaensOutput(std::string_view text, const JaensConfig &config);

}  // namespace faithful

#endif  // FAITHFUL_TRAINING_PREP_H_
