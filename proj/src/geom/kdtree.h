// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "geom/vec.h"

namespace archkit::geom {

/// Static 3D KD-tree over a point set. Queries are thread-safe; ties on
/// distance are broken by the lower point index so results are deterministic.
class KdTree {
 public:
  KdTree() = default;
  explicit KdTree(std::vector<Vec3f> points);

  struct Hit {
    int index = -1;
    float distance_sq = 0.f;
  };

  bool empty() const { return points_.empty(); }
  size_t size() const { return points_.size(); }
  const Vec3f& point(int i) const { return points_[static_cast<size_t>(i)]; }

  Hit nearest(const Vec3f& query) const;

  /// K nearest neighbors sorted by (distance, index) ascending. Returns fewer
  /// than k when the set is smaller.
  std::vector<Hit> knearest(const Vec3f& query, int k) const;

  /// All points within radius, sorted by index ascending.
  std::vector<int> radius(const Vec3f& query, float r) const;

 private:
  struct Node {
    Aabb box;
    int left = -1;
    int right = -1;
    int begin = 0;  // leaf range into order_
    int end = 0;
    bool leaf() const { return left < 0; }
  };

  int build(int begin, int end);
  void collect_radius(int node, const Vec3f& query, float r2, std::vector<int>& out) const;

  std::vector<Vec3f> points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace archkit::geom
