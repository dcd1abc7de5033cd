#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hecketree {

using VertexId = std::uint32_t;

enum class VertexType : std::uint8_t { even = 0, odd = 1 };

/// Default cap on the number of vertices a single ball may allocate.
inline constexpr std::size_t kDefaultMaxBallVertices = 8'000'000;

/// Number of vertices in the ball without building it.
std::size_t ball_vertex_count(int q0, int q1, int radius);

/// Finite ball around a root o in the (q0+1, q1+1)-semi-homogeneous tree.
///
/// Vertices are numbered in breadth-first order, so every sphere and every
/// child list is a contiguous id range. The root is even type and has q0+1
/// children; a vertex at depth d > 0 has type d mod 2 and q_type children
/// (its remaining neighbour is the parent). Children are ordered, and the
/// first child at each level defines the marked ray toward the boundary.
class TreeBall {
 public:
  /// Throws std::invalid_argument when q0 or q1 < 2 or radius < 0, and
  /// std::length_error when the ball would exceed max_vertices.
  static TreeBall build(int q0, int q1, int radius,
                        std::size_t max_vertices = kDefaultMaxBallVertices);

  int q0() const { return q0_; }
  int q1() const { return q1_; }
  int radius() const { return radius_; }
  std::size_t size() const { return parent_.size(); }

  static constexpr VertexId root() { return 0; }
  static constexpr VertexId kNoParent = static_cast<VertexId>(-1);

  int depth(VertexId v) const { return depth_[v]; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  VertexType type(VertexId v) const {
    return depth_[v] % 2 == 0 ? VertexType::even : VertexType::odd;
  }
  /// Interior vertices have their full neighbourhood inside the ball.
  bool is_interior(VertexId v) const { return depth_[v] < radius_; }

  std::size_t child_count(VertexId v) const;
  VertexId child(VertexId v, std::size_t i) const { return first_child_[v] + static_cast<VertexId>(i); }
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Vertices at distance r from the root, as an id range.
  std::span<const VertexId> sphere(int r) const;
  std::size_t sphere_size(int r) const { return sphere(r).size(); }

  /// Length of the unique path between u and v.
  int distance(VertexId u, VertexId v) const;

  /// Follows first children from v for `steps` levels.
  VertexId descend_first(VertexId v, int steps) const;

 private:
  TreeBall() = default;

  int q0_ = 0;
  int q1_ = 0;
  int radius_ = 0;
  std::vector<VertexId> parent_;
  std::vector<VertexId> first_child_;
  std::vector<std::uint8_t> depth_;
  std::vector<VertexId> ids_;  // identity permutation backing sphere spans
  std::vector<std::size_t> sphere_begin_;
};

/// Geodesic ray o = v0, v1, ..., vR following first children to the
/// boundary. It represents the distinguished end of the tree.
struct MarkedRay {
  std::vector<VertexId> path;

  static MarkedRay first_child_branch(const TreeBall& ball);
  std::size_t length() const { return path.size() - 1; }
  VertexId at(std::size_t j) const { return path.at(j); }
};

/// Undirected edge, named by its endpoint farther from the root.
struct Edge {
  VertexId child;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Oriented edge tail -> head.
struct DirectedEdge {
  VertexId tail;
  VertexId head;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

}  // namespace hecketree
