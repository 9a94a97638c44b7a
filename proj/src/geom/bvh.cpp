// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "geom/bvh.h"

#include <algorithm>
#include <numeric>

namespace archkit::geom {

namespace {
constexpr int kLeafSize = 4;
}

std::optional<RayHit> ray_triangle(const Ray& ray, const Vec3f& a, const Vec3f& b, const Vec3f& c) {
  constexpr float kEps = 1e-12f;
  Vec3f e1 = b - a;
  Vec3f e2 = c - a;
  Vec3f pvec = ray.direction.cross(e2);
  float det = e1.dot(pvec);
  if (std::abs(det) < kEps) return std::nullopt;
  float inv_det = 1.f / det;
  Vec3f tvec = ray.origin - a;
  float u = tvec.dot(pvec) * inv_det;
  if (u < 0.f || u > 1.f) return std::nullopt;
  Vec3f qvec = tvec.cross(e1);
  float v = ray.direction.dot(qvec) * inv_det;
  if (v < 0.f || u + v > 1.f) return std::nullopt;
  float t = e2.dot(qvec) * inv_det;
  if (t < ray.tmin || t > ray.tmax) return std::nullopt;
  RayHit hit;
  hit.t = t;
  hit.u = u;
  hit.v = v;
  return hit;
}

Bvh::Bvh(const TriMesh& mesh) {
  triangles_.reserve(mesh.face_count());
  std::vector<Vec3f> centroids;
  centroids.reserve(mesh.face_count());
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& tri = mesh.faces[f];
    Tri t{mesh.positions[tri[0]], mesh.positions[tri[1]], mesh.positions[tri[2]],
          static_cast<int>(f)};
    triangles_.push_back(t);
    centroids.push_back((t.a + t.b + t.c) / 3.f);
  }
  order_.resize(triangles_.size());
  std::iota(order_.begin(), order_.end(), 0);
  if (!triangles_.empty()) {
    nodes_.reserve(triangles_.size() / 2 + 2);
    root_ = build(0, static_cast<int>(triangles_.size()), centroids);
  }
}

int Bvh::build(int begin, int end, std::vector<Vec3f>& centroids) {
  Node node;
  Aabb centroid_box;
  for (int i = begin; i < end; ++i) {
    const Tri& t = triangles_[static_cast<size_t>(order_[static_cast<size_t>(i)])];
    node.box.expand(t.a);
    node.box.expand(t.b);
    node.box.expand(t.c);
    centroid_box.expand(centroids[static_cast<size_t>(order_[static_cast<size_t>(i)])]);
  }
  int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(node);

  if (end - begin <= kLeafSize) {
    nodes_[static_cast<size_t>(idx)].begin = begin;
    nodes_[static_cast<size_t>(idx)].end = end;
    return idx;
  }

  int axis = centroid_box.longest_axis();
  int mid = (begin + end) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int a, int b) {
                     float pa = centroids[static_cast<size_t>(a)][axis];
                     float pb = centroids[static_cast<size_t>(b)][axis];
                     return pa < pb || (pa == pb && a < b);
                   });
  int left = build(begin, mid, centroids);
  int right = build(mid, end, centroids);
  nodes_[static_cast<size_t>(idx)].left = left;
  nodes_[static_cast<size_t>(idx)].right = right;
  return idx;
}

bool Bvh::ray_box(const Aabb& box, const Ray& ray, const Vec3f& inv_dir, float tmax) {
  float t0 = ray.tmin, t1 = tmax;
  for (int a = 0; a < 3; ++a) {
    float tn = (box.min[a] - ray.origin[a]) * inv_dir[a];
    float tf = (box.max[a] - ray.origin[a]) * inv_dir[a];
    if (tn > tf) std::swap(tn, tf);
    t0 = std::max(t0, tn);
    t1 = std::min(t1, tf);
    if (t0 > t1) return false;
  }
  return true;
}

std::optional<RayHit> Bvh::intersect(const Ray& ray) const {
  if (empty()) return std::nullopt;
  Vec3f inv_dir = ray.direction.cwiseInverse();
  std::optional<RayHit> best;
  float tmax = ray.tmax;

  std::vector<int> stack;
  stack.push_back(root_);
  while (!stack.empty()) {
    int ni = stack.back();
    stack.pop_back();
    const Node& node = nodes_[static_cast<size_t>(ni)];
    if (!ray_box(node.box, ray, inv_dir, tmax)) continue;
    if (node.leaf()) {
      for (int i = node.begin; i < node.end; ++i) {
        const Tri& t = triangles_[static_cast<size_t>(order_[static_cast<size_t>(i)])];
        Ray clipped = ray;
        clipped.tmax = tmax;
        if (auto hit = ray_triangle(clipped, t.a, t.b, t.c)) {
          // Strictly-closer wins; equal t resolved by triangle index so the
          // result does not depend on traversal order.
          if (!best || hit->t < best->t || (hit->t == best->t && t.index < best->triangle)) {
            best = *hit;
            best->triangle = t.index;
            tmax = hit->t;
          }
        }
      }
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  return best;
}

bool Bvh::intersect_any(const Ray& ray) const {
  if (empty()) return false;
  Vec3f inv_dir = ray.direction.cwiseInverse();
  std::vector<int> stack;
  stack.push_back(root_);
  while (!stack.empty()) {
    int ni = stack.back();
    stack.pop_back();
    const Node& node = nodes_[static_cast<size_t>(ni)];
    if (!ray_box(node.box, ray, inv_dir, ray.tmax)) continue;
    if (node.leaf()) {
      for (int i = node.begin; i < node.end; ++i) {
        const Tri& t = triangles_[static_cast<size_t>(order_[static_cast<size_t>(i)])];
        if (ray_triangle(ray, t.a, t.b, t.c)) return true;
      }
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  return false;
}

namespace {
inline float box_distance_sq(const Aabb& box, const Vec3f& p) {
  Vec3f d = (box.min - p).cwiseMax(Vec3f::Zero()).cwiseMax(p - box.max);
  return d.squaredNorm();
}
}  // namespace

Bvh::ClosestHit Bvh::closest_point(const Vec3f& query) const {
  ClosestHit best;
  if (empty()) return best;
  float best_d2 = std::numeric_limits<float>::max();

  std::vector<int> stack;
  stack.push_back(root_);
  while (!stack.empty()) {
    int ni = stack.back();
    stack.pop_back();
    const Node& node = nodes_[static_cast<size_t>(ni)];
    if (box_distance_sq(node.box, query) > best_d2) continue;
    if (node.leaf()) {
      for (int i = node.begin; i < node.end; ++i) {
        const Tri& t = triangles_[static_cast<size_t>(order_[static_cast<size_t>(i)])];
        Vec3f cp;
        float d = point_triangle_distance(query, t.a, t.b, t.c, &cp);
        float d2 = d * d;
        if (d2 < best_d2 || (d2 == best_d2 && t.index < best.triangle)) {
          best_d2 = d2;
          best.distance = d;
          best.triangle = t.index;
          best.point = cp;
        }
      }
    } else {
      float dl = box_distance_sq(nodes_[static_cast<size_t>(node.left)].box, query);
      float dr = box_distance_sq(nodes_[static_cast<size_t>(node.right)].box, query);
      if (dl <= dr) {
        stack.push_back(node.right);
        stack.push_back(node.left);
      } else {
        stack.push_back(node.left);
        stack.push_back(node.right);
      }
    }
  }
  return best;
}

}  // namespace archkit::geom
