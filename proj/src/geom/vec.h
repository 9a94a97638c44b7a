// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <limits>

namespace archkit::geom {

using Vec2f = Eigen::Vector2f;
using Vec3f = Eigen::Vector3f;
using Vec3d = Eigen::Vector3d;
using Vec4f = Eigen::Vector4f;
using Mat3f = Eigen::Matrix3f;
using Mat4f = Eigen::Matrix4f;
using Quatf = Eigen::Quaternionf;

/// Axis-aligned bounding box in 3D.
struct Aabb {
  Vec3f min = Vec3f::Constant(std::numeric_limits<float>::max());
  Vec3f max = Vec3f::Constant(std::numeric_limits<float>::lowest());

  void expand(const Vec3f& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }
  void expand(const Aabb& b) {
    min = min.cwiseMin(b.min);
    max = max.cwiseMax(b.max);
  }
  void pad(float r) {
    min.array() -= r;
    max.array() += r;
  }
  bool empty() const { return (min.array() > max.array()).any(); }
  bool contains(const Vec3f& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }
  Vec3f center() const { return 0.5f * (min + max); }
  Vec3f extent() const { return max - min; }
  float surface_area() const {
    if (empty()) return 0.f;
    Vec3f d = extent();
    return 2.f * (d.x() * d.y() + d.y() * d.z() + d.z() * d.x());
  }
  int longest_axis() const {
    Vec3f d = extent();
    if (d.x() >= d.y() && d.x() >= d.z()) return 0;
    return d.y() >= d.z() ? 1 : 2;
  }
};

inline constexpr float kPi = 3.14159265358979323846f;

inline float deg_to_rad(float d) { return d * kPi / 180.f; }
inline float rad_to_deg(float r) { return r * 180.f / kPi; }

}  // namespace archkit::geom
