// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

namespace archkit {

/// Runs fn(begin, end) over [0, n) split into contiguous ranges, one per
/// worker. Results must be written to disjoint slots; with that contract the
/// output is identical for any thread count. threads <= 1 runs inline.
void parallel_for(int64_t n, int threads, const std::function<void(int64_t, int64_t)>& fn);

/// Process-wide default used by code paths that do not take an explicit
/// thread count. Set once at startup from the CLI --threads flag.
void set_default_threads(int threads);
int default_threads();

}  // namespace archkit
