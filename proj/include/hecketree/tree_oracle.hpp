#pragma once

// Structure constants of the three tree Hecke algebras obtained by counting
// in a finite ball, with no reference to any multiplication table.
//
// Cosets of the relevant stabilizer correspond to points of an orbit: vertices
// (spherical case), edges (edge-fixator case) or points of a horocycle (end
// case). The coefficient of the class of z in X * Y is then the number of
// points v with class(o, v) = X and class(v, z) = Y, for one fixed witness z.
// Every counting function computes the radius it needs and refuses a ball
// that is too small.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hecketree/dihedral_word.hpp"
#include "hecketree/iwahori.hpp"
#include "hecketree/tree_ball.hpp"

namespace hecketree::oracle {

using Count = std::uint64_t;

/// Throws std::invalid_argument unless ball.radius() >= needed.
void require_radius(const TreeBall& ball, int needed);

// ---------------------------------------------------------------- spherical

/// Radius needed to count the coefficient of Gamma_k in Gamma_n Gamma_m.
int spherical_required_radius(int n, int k);

/// #{v : d(o,v) = n, d(v,w) = m} for the witness w = first-child descent of
/// length k. Returns 0 outside |n-m| <= k <= n+m without touching the ball.
Count spherical_constant(const TreeBall& ball, int n, int m, int k);

/// Builds its own ball of the minimal radius.
Count spherical_constant(int n, int m, int k, int q0, int q1,
                         std::size_t max_vertices = kDefaultMaxBallVertices);

/// Coefficients of Gamma_0 .. Gamma_{n+m} in Gamma_n Gamma_m (tree distances,
/// so in the two-orbit case pass doubled indices).
std::vector<Count> spherical_product(const TreeBall& ball, int n, int m);

/// Same count with an arbitrary witness at distance k; used to check that
/// the answer does not depend on the witness.
Count spherical_constant_at(const TreeBall& ball, int n, int m, VertexId witness);

// --------------------------------------------------------------- edges

/// The base edge e: root to its first child.
inline Edge base_edge(const TreeBall& ball) { return Edge{ball.child(TreeBall::root(), 0)}; }
inline DirectedEdge base_directed_edge(const TreeBall& ball) {
  return DirectedEdge{TreeBall::root(), ball.child(TreeBall::root(), 0)};
}

/// Type-respecting Weyl distance. Each step of the edge path from e to f
/// crosses a vertex; an even vertex contributes s, an odd one t.
DihedralWord weyl_distance(const TreeBall& ball, Edge e, Edge f);

/// Weyl distance of oriented edges, relative to the tail of e: a vertex at
/// even distance from e.tail counts as s. If f.tail is at odd distance from
/// e.tail the result is i * bar(crossing word), otherwise the crossing word.
ExtendedIndex weyl_distance(const TreeBall& ball, DirectedEdge e, DirectedEdge f);

/// Radius that guarantees every edge at Weyl distance <= len from the base
/// edge lies in the ball.
inline int edge_required_radius(std::size_t len) { return static_cast<int>(len) + 1; }

/// Deterministic edge g with weyl_distance(base, g) = u.
Edge edge_witness(const TreeBall& ball, const DihedralWord& u);
DirectedEdge directed_edge_witness(const TreeBall& ball, const ExtendedIndex& u);

/// Counts edges grouped by their Weyl distance from the base edge.
///
/// Undirected mode uses the global vertex types (the type-preserving
/// algebra); directed mode uses orientation relative to the base edge's tail
/// and needs a homogeneous ball (the algebra with an inversion).
class IwahoriOracle {
 public:
  IwahoriOracle(const TreeBall& ball, bool directed);

  bool directed() const { return directed_; }
  const TreeBall& ball() const { return *ball_; }

  /// Coefficient of D_u in D_w D_w2.
  Count constant(const ExtendedIndex& w, const ExtendedIndex& w2,
                 const ExtendedIndex& u) const;

  /// All nonzero coefficients of D_w D_w2.
  std::map<ExtendedIndex, Count> product(const ExtendedIndex& w,
                                         const ExtendedIndex& w2) const;

  /// Number of edges at Weyl distance w (must be fully inside the ball).
  Count bucket_size(const ExtendedIndex& w) const;

 private:
  struct Oriented {
    VertexId tail;
    VertexId head;
  };
  ExtendedIndex distance(const Oriented& a, const Oriented& b) const;
  Oriented witness(const ExtendedIndex& u) const;
  const std::vector<Oriented>& bucket(const ExtendedIndex& w) const;

  const TreeBall* ball_;
  bool directed_;
  Oriented base_;
  std::map<ExtendedIndex, std::vector<Oriented>> buckets_;
};

/// Builds its own ball (radius |w|+|w2|+1) and counts in the type-preserving
/// setting.
Count iwahori_constant(const DihedralWord& w, const DihedralWord& w2,
                       const DihedralWord& u, int q0, int q1,
                       std::size_t max_vertices = kDefaultMaxBallVertices);

/// Oriented version in the homogeneous tree of branching q.
Count iwahori_constant(const ExtendedIndex& w, const ExtendedIndex& w2,
                       const ExtendedIndex& u, int q,
                       std::size_t max_vertices = kDefaultMaxBallVertices);

// ---------------------------------------------------------------- horocycles

/// d(x, v_R) - R along the marked ray; constant on horocycles.
int busemann(const TreeBall& ball, const MarkedRay& ray, VertexId x);

/// Confluence class of two points of one horocycle. Throws
/// std::invalid_argument if their Busemann values differ.
int horocycle_class(const TreeBall& ball, const MarkedRay& ray, VertexId u, VertexId v);

/// Points of the horocycle of o with class m relative to o, in id order.
std::vector<VertexId> horocycle_members(const TreeBall& ball, const MarkedRay& ray, int m);

/// Deterministic witness of class k: second child of v_k, then first children.
VertexId horocycle_witness(const TreeBall& ball, const MarkedRay& ray, int k);

inline int horocycle_required_radius(int m, int k) { return 2 * std::max(m, k); }

/// #{v : class(o,v) = m, class(v,w) = n} for the witness w of class k.
Count horocycle_constant(const TreeBall& ball, const MarkedRay& ray, int m, int n, int k);
Count horocycle_constant(int m, int n, int k, int q,
                         std::size_t max_vertices = kDefaultMaxBallVertices);

/// Coefficients of M_0 .. M_max(m,n) in M_m M_n.
std::vector<Count> horocycle_product(const TreeBall& ball, const MarkedRay& ray,
                                     int m, int n);

}  // namespace hecketree::oracle
