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

// External annotator contract: a shell command that reads dataset JSONL on
// stdin and writes annotation JSONL on stdout. Any recognizer that honours
// the two schemas can be plugged in.

#ifndef FAITHFUL_ANNOTATOR_H_
#define FAITHFUL_ANNOTATOR_H_

#include <optional>
#include <string>

namespace faithful {

inline constexpr const char *kAnnotatorEnvVar = "ENTITY_FAITHFUL_ANNOTATOR";

// The --annotator flag if given, else $ENTITY_FAITHFUL_ANNOTATOR, else none.
std::optional<std::string> ResolveAnnotatorCommand(const std::optional<std::string> &flag);

// Runs `command` under /bin/sh with stdin from `input_path` and stdout to
// `output_path`; stderr is inherited. Returns the exit status (128 + signal
// number if it was killed). Throws std::runtime_error if it cannot be
// started.
int RunAnnotator(const std::string &command, const std::string &input_path, const std::string &output_path);

}  // namespace faithful

#endif  // FAITHFUL_ANNOTATOR_H_
