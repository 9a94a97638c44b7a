// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "geom/trimesh.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "core/error.h"

namespace archkit::geom {

Vec3f TriMesh::face_normal(int f) const {
  const auto& tri = faces[static_cast<size_t>(f)];
  Vec3f e1 = positions[tri[1]] - positions[tri[0]];
  Vec3f e2 = positions[tri[2]] - positions[tri[0]];
  Vec3f n = e1.cross(e2);
  float len = n.norm();
  return len > 0.f ? Vec3f(n / len) : Vec3f::UnitZ();
}

float TriMesh::face_area(int f) const {
  const auto& tri = faces[static_cast<size_t>(f)];
  Vec3f e1 = positions[tri[1]] - positions[tri[0]];
  Vec3f e2 = positions[tri[2]] - positions[tri[0]];
  return 0.5f * e1.cross(e2).norm();
}

float TriMesh::surface_area() const {
  double total = 0.0;
  for (size_t f = 0; f < faces.size(); ++f) total += face_area(static_cast<int>(f));
  return static_cast<float>(total);
}

Aabb TriMesh::bounds() const {
  Aabb box;
  for (const auto& p : positions) box.expand(p);
  return box;
}

void TriMesh::compute_vertex_normals() {
  normals.assign(positions.size(), Vec3f::Zero());
  for (const auto& tri : faces) {
    Vec3f e1 = positions[tri[1]] - positions[tri[0]];
    Vec3f e2 = positions[tri[2]] - positions[tri[0]];
    Vec3f n = e1.cross(e2);  // area-weighted
    normals[tri[0]] += n;
    normals[tri[1]] += n;
    normals[tri[2]] += n;
  }
  for (auto& n : normals) {
    float len = n.norm();
    if (len > 0.f) n /= len;
  }
}

void TriMesh::apply_translation(const Vec3f& t) {
  for (auto& p : positions) p += t;
}

std::vector<SurfaceSample> sample_surface(const TriMesh& mesh, int n, Rng& rng) {
  ARCHKIT_REQUIRE(n >= 0, "sample_surface: negative sample count");
  std::vector<SurfaceSample> out;
  if (mesh.empty() || n == 0) return out;

  std::vector<double> cumulative(mesh.faces.size());
  double total = 0.0;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    total += mesh.face_area(static_cast<int>(f));
    cumulative[f] = total;
  }
  ARCHKIT_REQUIRE(total > 0.0, "sample_surface: degenerate mesh with zero area");

  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double target = rng.uniform() * total;
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), target);
    int f = static_cast<int>(std::distance(cumulative.begin(), it));
    if (f >= static_cast<int>(mesh.faces.size())) f = static_cast<int>(mesh.faces.size()) - 1;

    // Uniform barycentric coordinates via the sqrt trick.
    float r1 = std::sqrt(rng.uniform_float());
    float r2 = rng.uniform_float();
    float w0 = 1.f - r1;
    float w1 = r1 * (1.f - r2);
    float w2 = r1 * r2;
    const auto& tri = mesh.faces[static_cast<size_t>(f)];
    SurfaceSample s;
    s.position = w0 * mesh.positions[tri[0]] + w1 * mesh.positions[tri[1]] +
                 w2 * mesh.positions[tri[2]];
    s.normal = mesh.face_normal(f);
    s.face = f;
    out.push_back(s);
  }
  return out;
}

namespace {
inline uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}
}  // namespace

int euler_characteristic(const TriMesh& mesh) {
  std::unordered_map<uint64_t, int> edges;
  edges.reserve(mesh.faces.size() * 3);
  for (const auto& tri : mesh.faces) {
    edges[edge_key(tri[0], tri[1])]++;
    edges[edge_key(tri[1], tri[2])]++;
    edges[edge_key(tri[2], tri[0])]++;
  }
  return static_cast<int>(mesh.vertex_count()) - static_cast<int>(edges.size()) +
         static_cast<int>(mesh.face_count());
}

bool is_closed(const TriMesh& mesh) {
  if (mesh.empty()) return false;
  std::unordered_map<uint64_t, int> edges;
  edges.reserve(mesh.faces.size() * 3);
  for (const auto& tri : mesh.faces) {
    edges[edge_key(tri[0], tri[1])]++;
    edges[edge_key(tri[1], tri[2])]++;
    edges[edge_key(tri[2], tri[0])]++;
  }
  for (const auto& [key, count] : edges) {
    (void)key;
    if (count != 2) return false;
  }
  return true;
}

float point_triangle_distance(const Vec3f& p, const Vec3f& a, const Vec3f& b, const Vec3f& c,
                              Vec3f* closest) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  Vec3f ab = b - a, ac = c - a, ap = p - a;
  float d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.f && d2 <= 0.f) {
    if (closest) *closest = a;
    return (p - a).norm();
  }
  Vec3f bp = p - b;
  float d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.f && d4 <= d3) {
    if (closest) *closest = b;
    return (p - b).norm();
  }
  float vc = d1 * d4 - d3 * d2;
  if (vc <= 0.f && d1 >= 0.f && d3 <= 0.f) {
    float v = d1 / (d1 - d3);
    Vec3f q = a + v * ab;
    if (closest) *closest = q;
    return (p - q).norm();
  }
  Vec3f cp = p - c;
  float d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.f && d5 <= d6) {
    if (closest) *closest = c;
    return (p - c).norm();
  }
  float vb = d5 * d2 - d1 * d6;
  if (vb <= 0.f && d2 >= 0.f && d6 <= 0.f) {
    float w = d2 / (d2 - d6);
    Vec3f q = a + w * ac;
    if (closest) *closest = q;
    return (p - q).norm();
  }
  float va = d3 * d6 - d5 * d4;
  if (va <= 0.f && (d4 - d3) >= 0.f && (d5 - d6) >= 0.f) {
    float w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    Vec3f q = b + w * (c - b);
    if (closest) *closest = q;
    return (p - q).norm();
  }
  float denom = 1.f / (va + vb + vc);
  float v = vb * denom;
  float w = vc * denom;
  Vec3f q = a + ab * v + ac * w;
  if (closest) *closest = q;
  return (p - q).norm();
}

TriMesh make_icosphere(float radius, int subdivisions, const Vec3f& center) {
  const float t = (1.f + std::sqrt(5.f)) / 2.f;
  std::vector<Vec3f> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v.normalize();
  std::vector<Eigen::Vector3i> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3f m = (verts[static_cast<size_t>(a)] + verts[static_cast<size_t>(b)]).normalized();
      verts.push_back(m);
      int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<Eigen::Vector3i> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  TriMesh mesh;
  mesh.positions.reserve(verts.size());
  for (const auto& v : verts) mesh.positions.push_back(center + radius * v);
  mesh.faces = std::move(faces);
  mesh.compute_vertex_normals();
  return mesh;
}

}  // namespace archkit::geom
