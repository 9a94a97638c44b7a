// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace archkit::geom {

extern const int8_t kMcTriTable[256][16];
extern const int kMcEdgeCorners[12][2];
extern const int kMcCornerOffsets[8][3];

}  // namespace archkit::geom
