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

#include "fmzv/primes.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "fmzv/errors.h"

namespace fmzv {

std::vector<uint32_t> OddPrimesInRange(uint32_t lo, uint32_t hi) {
  if (hi > kMaxSievePrime) {
    throw InvalidParameters("p_max " + std::to_string(hi) + " exceeds " +
                            std::to_string(kMaxSievePrime));
  }
  std::vector<uint32_t> out;
  if (hi < 3) return out;
  std::vector<bool> composite(hi + 1, false);
  for (uint32_t i = 2; uint64_t{i} * i <= hi; ++i) {
    if (composite[i]) continue;
    for (uint32_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (uint32_t n = std::max<uint32_t>(lo, 3); n <= hi; ++n) {
    if (!composite[n] && (n & 1)) out.push_back(n);
  }
  return out;
}

void ParallelFor(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fmzv
