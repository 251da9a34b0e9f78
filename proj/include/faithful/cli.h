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

#ifndef FAITHFUL_CLI_H_
#define FAITHFUL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace faithful {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the entity-faithful tool. `args` excludes the program name.
// Subcommands: annotate, score, stats, filter, prep-bio, prep-jaens,
// parse-jaens. Output files named "-" go to `out`.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int RunCli(int argc, char **argv);

}  // namespace faithful

#endif  // FAITHFUL_CLI_H_
