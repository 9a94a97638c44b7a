// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/rng.h"
#include "geom/vec.h"

namespace archkit::geom {

/// Indexed triangle mesh with optional per-vertex normals and colors.
/// The carrier of every surface result in the toolkit.
struct TriMesh {
  std::vector<Vec3f> positions;
  std::vector<Eigen::Vector3i> faces;
  std::vector<Vec3f> normals;  // per-vertex, empty if absent
  std::vector<Vec3f> colors;   // per-vertex RGB in [0,1], empty if absent

  size_t vertex_count() const { return positions.size(); }
  size_t face_count() const { return faces.size(); }
  bool has_normals() const { return normals.size() == positions.size() && !positions.empty(); }
  bool has_colors() const { return colors.size() == positions.size() && !positions.empty(); }
  bool empty() const { return positions.empty() || faces.empty(); }

  Vec3f face_normal(int f) const;
  float face_area(int f) const;
  float surface_area() const;
  Aabb bounds() const;

  /// Area-weighted per-vertex normals, normalized.
  void compute_vertex_normals();

  void apply_translation(const Vec3f& t);
};

struct SurfaceSample {
  Vec3f position;
  Vec3f normal;  // geometric face normal
  int face = -1;
};

/// Area-weighted uniform surface sampling; deterministic given the rng state.
std::vector<SurfaceSample> sample_surface(const TriMesh& mesh, int n, Rng& rng);

/// V - E + F over the undirected edge set (2 for a closed genus-0 surface).
int euler_characteristic(const TriMesh& mesh);

/// True when every undirected edge is shared by exactly two faces.
bool is_closed(const TriMesh& mesh);

/// Exact distance from a point to a triangle; also returns the closest point.
float point_triangle_distance(const Vec3f& p, const Vec3f& a, const Vec3f& b, const Vec3f& c,
                              Vec3f* closest = nullptr);

/// Unit sphere approximated by recursive icosahedron subdivision, then scaled.
TriMesh make_icosphere(float radius, int subdivisions, const Vec3f& center = Vec3f::Zero());

}  // namespace archkit::geom
