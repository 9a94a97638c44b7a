// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "geom/kdtree.h"

#include <algorithm>
#include <numeric>
#include <queue>

namespace archkit::geom {

namespace {
constexpr int kLeafSize = 8;

inline float box_distance_sq(const Aabb& box, const Vec3f& p) {
  Vec3f d = (box.min - p).cwiseMax(Vec3f::Zero()).cwiseMax(p - box.max);
  return d.squaredNorm();
}
}  // namespace

KdTree::KdTree(std::vector<Vec3f> points) : points_(std::move(points)) {
  order_.resize(points_.size());
  std::iota(order_.begin(), order_.end(), 0);
  if (!points_.empty()) {
    nodes_.reserve(points_.size() / kLeafSize * 2 + 2);
    root_ = build(0, static_cast<int>(points_.size()));
  }
}

int KdTree::build(int begin, int end) {
  Node node;
  for (int i = begin; i < end; ++i) node.box.expand(points_[static_cast<size_t>(order_[static_cast<size_t>(i)])]);
  int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(node);

  if (end - begin <= kLeafSize) {
    // Sort leaf entries by index for deterministic tie-breaking.
    std::sort(order_.begin() + begin, order_.begin() + end);
    nodes_[static_cast<size_t>(idx)].begin = begin;
    nodes_[static_cast<size_t>(idx)].end = end;
    return idx;
  }

  int axis = node.box.longest_axis();
  int mid = (begin + end) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](int a, int b) {
                     float pa = points_[static_cast<size_t>(a)][axis];
                     float pb = points_[static_cast<size_t>(b)][axis];
                     return pa < pb || (pa == pb && a < b);
                   });
  int left = build(begin, mid);
  int right = build(mid, end);
  nodes_[static_cast<size_t>(idx)].left = left;
  nodes_[static_cast<size_t>(idx)].right = right;
  return idx;
}

KdTree::Hit KdTree::nearest(const Vec3f& query) const {
  auto hits = knearest(query, 1);
  return hits.empty() ? Hit{} : hits.front();
}

std::vector<KdTree::Hit> KdTree::knearest(const Vec3f& query, int k) const {
  std::vector<Hit> best;
  if (empty() || k <= 0) return best;
  k = std::min<int>(k, static_cast<int>(points_.size()));

  // Max-heap ordered worst-first by (distance, index descending tie-break):
  // a candidate replaces the worst when strictly better under that order.
  auto worse = [](const Hit& a, const Hit& b) {
    if (a.distance_sq != b.distance_sq) return a.distance_sq < b.distance_sq;
    return a.index < b.index;
  };
  std::priority_queue<Hit, std::vector<Hit>, decltype(worse)> heap(worse);

  // Iterative traversal, nearer child first.
  std::vector<int> stack;
  stack.push_back(root_);
  while (!stack.empty()) {
    int ni = stack.back();
    stack.pop_back();
    const Node& node = nodes_[static_cast<size_t>(ni)];
    if (static_cast<int>(heap.size()) == k) {
      float worst = heap.top().distance_sq;
      if (box_distance_sq(node.box, query) > worst) continue;
    }
    if (node.leaf()) {
      for (int i = node.begin; i < node.end; ++i) {
        int pi = order_[static_cast<size_t>(i)];
        float d2 = (points_[static_cast<size_t>(pi)] - query).squaredNorm();
        Hit h{pi, d2};
        if (static_cast<int>(heap.size()) < k) {
          heap.push(h);
        } else if (d2 < heap.top().distance_sq ||
                   (d2 == heap.top().distance_sq && pi < heap.top().index)) {
          heap.pop();
          heap.push(h);
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

  best.resize(heap.size());
  for (size_t i = best.size(); i-- > 0;) {
    best[i] = heap.top();
    heap.pop();
  }
  return best;
}

std::vector<int> KdTree::radius(const Vec3f& query, float r) const {
  std::vector<int> out;
  if (empty() || r < 0.f) return out;
  collect_radius(root_, query, r * r, out);
  std::sort(out.begin(), out.end());
  return out;
}

void KdTree::collect_radius(int ni, const Vec3f& query, float r2, std::vector<int>& out) const {
  const Node& node = nodes_[static_cast<size_t>(ni)];
  if (box_distance_sq(node.box, query) > r2) return;
  if (node.leaf()) {
    for (int i = node.begin; i < node.end; ++i) {
      int pi = order_[static_cast<size_t>(i)];
      if ((points_[static_cast<size_t>(pi)] - query).squaredNorm() <= r2) out.push_back(pi);
    }
    return;
  }
  collect_radius(node.left, query, r2, out);
  collect_radius(node.right, query, r2, out);
}

}  // namespace archkit::geom
