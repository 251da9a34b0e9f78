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

#include "faithful/parallel.h"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

namespace faithful {
namespace {

TEST(Parallel, MapKeepsInputOrder) {
  std::vector<int> in(1000);
  std::iota(in.begin(), in.end(), 0);
  for (std::size_t workers : {1u, 2u, 7u}) {
    const auto out = ParallelMap(std::span<const int>(in), workers, [](int x) { return x * x; });
    ASSERT_EQ(out.size(), in.size());
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(ParallelFor(100, 4,
                           [](std::size_t i) {
                             if (i == 57) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

TEST(Parallel, EmptyInput) {
  const std::vector<int> none;
  EXPECT_TRUE(ParallelMap(std::span<const int>(none), 4, [](int x) { return x; }).empty());
}

}  // namespace
}  // namespace faithful
