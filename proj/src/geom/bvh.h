// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "geom/trimesh.h"
#include "geom/vec.h"

namespace archkit::geom {

struct Ray {
  Vec3f origin;
  Vec3f direction;  // need not be normalized
  float tmin = 0.f;
  float tmax = std::numeric_limits<float>::max();
};

struct RayHit {
  float t = 0.f;
  int triangle = -1;
  float u = 0.f, v = 0.f;  // barycentric coords of hit wrt triangle (b, c)
};

/// Axis-aligned bounding volume hierarchy over mesh triangles. Immutable
/// after construction; all queries are const and thread-safe.
class Bvh {
 public:
  Bvh() = default;
  Bvh(const TriMesh& mesh);

  bool empty() const { return triangles_.empty(); }

  /// Closest intersection along the ray, if any.
  std::optional<RayHit> intersect(const Ray& ray) const;

  /// True as soon as any triangle intersects the ray (occlusion test).
  bool intersect_any(const Ray& ray) const;

  struct ClosestHit {
    float distance = std::numeric_limits<float>::max();
    int triangle = -1;
    Vec3f point = Vec3f::Zero();
  };

  /// Exact closest point on the mesh surface.
  ClosestHit closest_point(const Vec3f& query) const;

 private:
  struct Node {
    Aabb box;
    int left = -1, right = -1;
    int begin = 0, end = 0;
    bool leaf() const { return left < 0; }
  };

  struct Tri {
    Vec3f a, b, c;
    int index;
  };

  int build(int begin, int end, std::vector<Vec3f>& centroids);
  static bool ray_box(const Aabb& box, const Ray& ray, const Vec3f& inv_dir, float tmax);

  std::vector<Tri> triangles_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Moller-Trumbore; returns t plus barycentrics when the ray hits.
std::optional<RayHit> ray_triangle(const Ray& ray, const Vec3f& a, const Vec3f& b, const Vec3f& c);

}  // namespace archkit::geom
