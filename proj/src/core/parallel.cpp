// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "core/parallel.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace archkit {

namespace {
std::atomic<int> g_default_threads{1};
}

void set_default_threads(int threads) { g_default_threads.store(std::max(1, threads)); }

int default_threads() { return g_default_threads.load(); }

void parallel_for(int64_t n, int threads, const std::function<void(int64_t, int64_t)>& fn) {
  if (n <= 0) return;
  threads = std::max(1, threads);
  if (threads == 1 || n == 1) {
    fn(0, n);
    return;
  }
  int workers = static_cast<int>(std::min<int64_t>(threads, n));
  int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    int64_t begin = w * chunk;
    int64_t end = std::min<int64_t>(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace archkit
