// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "geom/trimesh.h"

namespace archkit::geom {

/// Generalized winding number of the mesh around p (1 inside a closed
/// outward-oriented surface, 0 outside; can exceed 1 inside self-overlapping
/// regions). Accumulated in double.
double winding_number(const TriMesh& mesh, const Vec3f& p);

/// Inside test via winding number: w > 0.5.
bool winding_inside(const TriMesh& mesh, const Vec3f& p);

}  // namespace archkit::geom
