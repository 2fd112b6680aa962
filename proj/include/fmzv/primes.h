// Copyright 2026 The fmzv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fmzv {

constexpr uint32_t kMaxSievePrime = 1'000'000;

// Odd primes in [lo, hi], ascending. hi <= kMaxSievePrime.
std::vector<uint32_t> OddPrimesInRange(uint32_t lo, uint32_t hi);

// Runs task(i) for i in [0, count) on up to `threads` workers (0 picks the
// hardware concurrency). Each index is claimed by exactly one worker, so a
// task that writes only slot i of a presized vector is race-free. The first
// exception thrown by any task is rethrown after all workers join.
void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& task);

}  // namespace fmzv
