#include "hecketree/tree_ball.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hecketree {

namespace {

std::size_t children_at_depth(int q0, int q1, int depth) {
  if (depth == 0) return static_cast<std::size_t>(q0) + 1;
  return static_cast<std::size_t>(depth % 2 == 0 ? q0 : q1);
}

void check_params(int q0, int q1, int radius) {
  if (q0 < 2 || q1 < 2)
    throw std::invalid_argument("tree branching parameters must be >= 2 (got q0=" +
                                std::to_string(q0) + ", q1=" + std::to_string(q1) + ")");
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  if (radius > 255) throw std::invalid_argument("ball radius must be <= 255");
}

}  // namespace

std::size_t ball_vertex_count(int q0, int q1, int radius) {
  check_params(q0, q1, radius);
  constexpr std::size_t kSaturated = static_cast<std::size_t>(-1);
  std::size_t total = 1;
  std::size_t level = 1;
  for (int d = 0; d < radius; ++d) {
    std::size_t c = children_at_depth(q0, q1, d);
    if (level > kSaturated / c) return kSaturated;
    level *= c;
    if (total > kSaturated - level) return kSaturated;
    total += level;
  }
  return total;
}

TreeBall TreeBall::build(int q0, int q1, int radius, std::size_t max_vertices) {
  const std::size_t n = ball_vertex_count(q0, q1, radius);
  if (n > max_vertices)
    throw std::length_error("ball of radius " + std::to_string(radius) + " needs " +
                            std::to_string(n) + " vertices, budget is " +
                            std::to_string(max_vertices));
  TreeBall ball;
  ball.q0_ = q0;
  ball.q1_ = q1;
  ball.radius_ = radius;
  ball.parent_.reserve(n);
  ball.depth_.reserve(n);
  ball.first_child_.assign(n, 0);
  ball.parent_.push_back(kNoParent);
  ball.depth_.push_back(0);
  ball.sphere_begin_.push_back(0);

  std::size_t level_begin = 0;
  for (int d = 0; d < radius; ++d) {
    const std::size_t level_end = ball.parent_.size();
    ball.sphere_begin_.push_back(level_end);
    const std::size_t c = children_at_depth(q0, q1, d);
    for (std::size_t v = level_begin; v < level_end; ++v) {
      ball.first_child_[v] = static_cast<VertexId>(ball.parent_.size());
      for (std::size_t i = 0; i < c; ++i) {
        ball.parent_.push_back(static_cast<VertexId>(v));
        ball.depth_.push_back(static_cast<std::uint8_t>(d + 1));
      }
    }
    level_begin = level_end;
  }
  ball.sphere_begin_.push_back(ball.parent_.size());
  // Leaves point past the end; child_count() reports zero for them.
  for (std::size_t v = level_begin; v < n; ++v)
    ball.first_child_[v] = static_cast<VertexId>(n);
  ball.ids_.resize(n);
  std::iota(ball.ids_.begin(), ball.ids_.end(), VertexId{0});
  return ball;
}

std::size_t TreeBall::child_count(VertexId v) const {
  if (depth_[v] >= radius_) return 0;
  return children_at_depth(q0_, q1_, depth_[v]);
}

std::vector<VertexId> TreeBall::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  if (parent_[v] != kNoParent) out.push_back(parent_[v]);
  for (std::size_t i = 0; i < child_count(v); ++i) out.push_back(child(v, i));
  return out;
}

std::span<const VertexId> TreeBall::sphere(int r) const {
  if (r < 0 || r > radius_) throw std::out_of_range("sphere radius outside ball");
  const std::size_t b = sphere_begin_[static_cast<std::size_t>(r)];
  const std::size_t e = sphere_begin_[static_cast<std::size_t>(r) + 1];
  return std::span<const VertexId>(ids_.data() + b, e - b);
}

int TreeBall::distance(VertexId u, VertexId v) const {
  int d = 0;
  while (depth_[u] > depth_[v]) {
    u = parent_[u];
    ++d;
  }
  while (depth_[v] > depth_[u]) {
    v = parent_[v];
    ++d;
  }
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
    d += 2;
  }
  return d;
}

VertexId TreeBall::descend_first(VertexId v, int steps) const {
  for (int i = 0; i < steps; ++i) {
    if (child_count(v) == 0) throw std::out_of_range("descent leaves the ball");
    v = child(v, 0);
  }
  return v;
}

MarkedRay MarkedRay::first_child_branch(const TreeBall& ball) {
  MarkedRay ray;
  VertexId v = TreeBall::root();
  ray.path.push_back(v);
  while (ball.child_count(v) > 0) {
    v = ball.child(v, 0);
    ray.path.push_back(v);
  }
  return ray;
}

}  // namespace hecketree
