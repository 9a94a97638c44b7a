// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "geom/winding.h"

#include <cmath>

namespace archkit::geom {

double winding_number(const TriMesh& mesh, const Vec3f& p) {
  // Sum of signed solid angles (van Oosterom & Strackee) over all triangles.
  const Vec3d q = p.cast<double>();
  double total = 0.0;
  for (const auto& tri : mesh.faces) {
    Vec3d a = mesh.positions[tri[0]].cast<double>() - q;
    Vec3d b = mesh.positions[tri[1]].cast<double>() - q;
    Vec3d c = mesh.positions[tri[2]].cast<double>() - q;
    double la = a.norm(), lb = b.norm(), lc = c.norm();
    double numerator = a.dot(b.cross(c));
    double denominator =
        la * lb * lc + a.dot(b) * lc + b.dot(c) * la + c.dot(a) * lb;
    total += 2.0 * std::atan2(numerator, denominator);
  }
  return total / (4.0 * M_PI);
}

bool winding_inside(const TriMesh& mesh, const Vec3f& p) {
  return winding_number(mesh, p) > 0.5;
}

}  // namespace archkit::geom
