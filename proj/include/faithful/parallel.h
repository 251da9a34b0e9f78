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

#ifndef FAITHFUL_PARALLEL_H_
#define FAITHFUL_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace faithful {

// Runs fn(i) for i in [0, n) on up to `workers` threads (1 means inline).
// The first exception thrown by any call is rethrown after all threads join.
void ParallelFor(std::size_t n, std::size_t workers, const std::function<void(std::size_t)> &fn);

// Applies fn to every item; results keep input order whatever the worker
// count.
template <typename In, typename Fn>
auto ParallelMap(std::span<const In> items, std::size_t workers, Fn fn) {
  using Out = decltype(fn(items[0]));
  std::vector<Out> results(items.size());
  ParallelFor(items.size(), workers, [&](std::size_t i) { results[i] = fn(items[i]); });
  return results;
}

}  // namespace faithful

#endif  // FAITHFUL_PARALLEL_H_
