#include "hecketree/tree_oracle.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hecketree::oracle {

void require_radius(const TreeBall& ball, int needed) {
  if (ball.radius() < needed)
    throw std::invalid_argument("ball radius " + std::to_string(ball.radius()) +
                                " is too small, counting needs radius " +
                                std::to_string(needed));
}

// ---------------------------------------------------------------- spherical

int spherical_required_radius(int n, int k) { return std::max(n, k); }

Count spherical_constant_at(const TreeBall& ball, int n, int m, VertexId witness) {
  const int k = ball.depth(witness);
  require_radius(ball, spherical_required_radius(n, k));
  Count count = 0;
  for (VertexId v : ball.sphere(n))
    if (ball.distance(v, witness) == m) ++count;
  return count;
}

Count spherical_constant(const TreeBall& ball, int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0) throw std::invalid_argument("negative sphere index");
  if (k > n + m || k < std::abs(n - m) || (n + m + k) % 2 != 0) return 0;
  require_radius(ball, spherical_required_radius(n, k));
  return spherical_constant_at(ball, n, m, ball.descend_first(TreeBall::root(), k));
}

Count spherical_constant(int n, int m, int k, int q0, int q1, std::size_t max_vertices) {
  if (k > n + m || k < std::abs(n - m) || (n + m + k) % 2 != 0) return 0;
  const TreeBall ball =
      TreeBall::build(q0, q1, spherical_required_radius(n, k), max_vertices);
  return spherical_constant(ball, n, m, k);
}

std::vector<Count> spherical_product(const TreeBall& ball, int n, int m) {
  require_radius(ball, n + m);
  std::vector<Count> out(static_cast<std::size_t>(n + m) + 1, 0);
  for (int k = 0; k <= n + m; ++k) out[static_cast<std::size_t>(k)] = spherical_constant(ball, n, m, k);
  return out;
}

// --------------------------------------------------------------- edges

namespace {

struct Closest {
  VertexId from;  // endpoint of the first edge
  VertexId to;    // endpoint of the second edge
  int dist;
};

Closest closest_endpoints(const TreeBall& ball, VertexId a0, VertexId a1, VertexId b0,
                          VertexId b1) {
  Closest best{a0, b0, ball.distance(a0, b0)};
  for (VertexId a : {a0, a1})
    for (VertexId b : {b0, b1}) {
      const int d = ball.distance(a, b);
      if (d < best.dist) best = {a, b, d};
    }
  return best;
}

bool same_edge(VertexId a0, VertexId a1, VertexId b0, VertexId b1) {
  return (a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0);
}

/// Next edge across x, away from the endpoint y0. Always steps downward.
VertexId step_across(const TreeBall& ball, VertexId x, VertexId y0) {
  if (ball.child_count(x) == 0) throw std::invalid_argument("edge witness leaves the ball");
  const VertexId c0 = ball.child(x, 0);
  return c0 != y0 ? c0 : ball.child(x, 1);
}

/// Undirected edge reached from the base edge by crossing the letters of c.
std::pair<VertexId, VertexId> walk(const TreeBall& ball, const DihedralWord& c) {
  VertexId a = TreeBall::root();
  VertexId b = ball.child(a, 0);
  for (std::size_t i = 0; i < c.length(); ++i) {
    const VertexType want = c.at(i) == Letter::s ? VertexType::even : VertexType::odd;
    const VertexId x = ball.type(a) == want ? a : b;
    const VertexId y0 = x == a ? b : a;
    const VertexId y = step_across(ball, x, y0);
    a = x;
    b = y;
  }
  return {a, b};
}

}  // namespace

DihedralWord weyl_distance(const TreeBall& ball, Edge e, Edge f) {
  const VertexId e0 = ball.parent(e.child), e1 = e.child;
  const VertexId f0 = ball.parent(f.child), f1 = f.child;
  if (same_edge(e0, e1, f0, f1)) return {};
  const Closest c = closest_endpoints(ball, e0, e1, f0, f1);
  const Letter first = ball.type(c.from) == VertexType::even ? Letter::s : Letter::t;
  return DihedralWord(first, static_cast<std::size_t>(c.dist) + 1);
}

ExtendedIndex weyl_distance(const TreeBall& ball, DirectedEdge e, DirectedEdge f) {
  const bool flipped = ball.distance(e.tail, f.tail) % 2 == 1;
  DihedralWord word;
  if (!same_edge(e.tail, e.head, f.tail, f.head)) {
    const Closest c = closest_endpoints(ball, e.tail, e.head, f.tail, f.head);
    const Letter first = ball.distance(e.tail, c.from) % 2 == 0 ? Letter::s : Letter::t;
    word = DihedralWord(first, static_cast<std::size_t>(c.dist) + 1);
  }
  return {flipped, flipped ? bar(word) : word};
}

Edge edge_witness(const TreeBall& ball, const DihedralWord& u) {
  require_radius(ball, edge_required_radius(u.length()));
  auto [a, b] = walk(ball, u);
  return Edge{ball.depth(a) > ball.depth(b) ? a : b};
}

DirectedEdge directed_edge_witness(const TreeBall& ball, const ExtendedIndex& u) {
  require_radius(ball, edge_required_radius(u.word.length()));
  const DihedralWord crossing = u.iflag ? bar(u.word) : u.word;
  auto [a, b] = walk(ball, crossing);
  const VertexType tail_type = u.iflag ? VertexType::odd : VertexType::even;
  return ball.type(a) == tail_type ? DirectedEdge{a, b} : DirectedEdge{b, a};
}

IwahoriOracle::IwahoriOracle(const TreeBall& ball, bool directed)
    : ball_(&ball), directed_(directed) {
  if (directed && ball.q0() != ball.q1())
    throw std::invalid_argument("oriented edge counting needs a homogeneous tree");
  if (ball.radius() < 1) throw std::invalid_argument("edge counting needs radius >= 1");
  base_ = {TreeBall::root(), ball.child(TreeBall::root(), 0)};
  const std::size_t complete = static_cast<std::size_t>(ball.radius() - 1);
  for (VertexId v = 1; v < ball.size(); ++v) {
    const Oriented down{ball.parent(v), v};
    const Oriented up{v, ball.parent(v)};
    for (const Oriented& f : {down, up}) {
      if (!directed_ && f.tail == v) continue;
      ExtendedIndex w = distance(base_, f);
      if (w.word.length() <= complete) buckets_[w].push_back(f);
    }
  }
}

ExtendedIndex IwahoriOracle::distance(const Oriented& a, const Oriented& b) const {
  if (directed_)
    return weyl_distance(*ball_, DirectedEdge{a.tail, a.head}, DirectedEdge{b.tail, b.head});
  const auto lower = [&](const Oriented& x) {
    return Edge{ball_->depth(x.tail) > ball_->depth(x.head) ? x.tail : x.head};
  };
  return ExtendedIndex(weyl_distance(*ball_, lower(a), lower(b)));
}

IwahoriOracle::Oriented IwahoriOracle::witness(const ExtendedIndex& u) const {
  if (directed_) {
    const DirectedEdge g = directed_edge_witness(*ball_, u);
    return {g.tail, g.head};
  }
  if (u.iflag) throw std::invalid_argument("inverted index in type-preserving counting");
  const Edge g = edge_witness(*ball_, u.word);
  return {ball_->parent(g.child), g.child};
}

const std::vector<IwahoriOracle::Oriented>& IwahoriOracle::bucket(const ExtendedIndex& w) const {
  if (!directed_ && w.iflag)
    throw std::invalid_argument("inverted index in type-preserving counting");
  require_radius(*ball_, edge_required_radius(w.word.length()));
  static const std::vector<Oriented> kEmpty;
  auto it = buckets_.find(w);
  return it == buckets_.end() ? kEmpty : it->second;
}

Count IwahoriOracle::bucket_size(const ExtendedIndex& w) const { return bucket(w).size(); }

Count IwahoriOracle::constant(const ExtendedIndex& w, const ExtendedIndex& w2,
                              const ExtendedIndex& u) const {
  const auto& candidates = bucket(w);
  const Oriented g = witness(u);
  Count count = 0;
  for (const Oriented& f : candidates)
    if (distance(f, g) == w2) ++count;
  return count;
}

std::map<ExtendedIndex, Count> IwahoriOracle::product(const ExtendedIndex& w,
                                                      const ExtendedIndex& w2) const {
  const std::size_t max_len = w.word.length() + w2.word.length();
  require_radius(*ball_, edge_required_radius(max_len));
  std::map<ExtendedIndex, Count> out;
  for (const DihedralWord& word : DihedralWord::all_up_to(max_len)) {
    for (bool flag : {false, true}) {
      if (flag && !directed_) continue;
      const ExtendedIndex u(flag, word);
      if (Count c = constant(w, w2, u); c != 0) out.emplace(u, c);
    }
  }
  return out;
}

Count iwahori_constant(const DihedralWord& w, const DihedralWord& w2, const DihedralWord& u,
                       int q0, int q1, std::size_t max_vertices) {
  const std::size_t len = std::max(w.length() + w2.length(), u.length());
  const TreeBall ball = TreeBall::build(q0, q1, edge_required_radius(len), max_vertices);
  return IwahoriOracle(ball, false).constant(w, w2, u);
}

Count iwahori_constant(const ExtendedIndex& w, const ExtendedIndex& w2,
                       const ExtendedIndex& u, int q, std::size_t max_vertices) {
  const std::size_t len = std::max(w.word.length() + w2.word.length(), u.word.length());
  const TreeBall ball = TreeBall::build(q, q, edge_required_radius(len), max_vertices);
  return IwahoriOracle(ball, true).constant(w, w2, u);
}

// ---------------------------------------------------------------- horocycles

int busemann(const TreeBall& ball, const MarkedRay& ray, VertexId x) {
  const int r = static_cast<int>(ray.length());
  return ball.distance(x, ray.at(ray.length())) - r;
}

int horocycle_class(const TreeBall& ball, const MarkedRay& ray, VertexId u, VertexId v) {
  if (busemann(ball, ray, u) != busemann(ball, ray, v))
    throw std::invalid_argument("vertices lie on different horocycles");
  return ball.distance(u, v) / 2;
}

std::vector<VertexId> horocycle_members(const TreeBall& ball, const MarkedRay& ray, int m) {
  require_radius(ball, 2 * m);
  std::vector<VertexId> out;
  for (VertexId v : ball.sphere(2 * m))
    if (busemann(ball, ray, v) == 0) out.push_back(v);
  return out;
}

VertexId horocycle_witness(const TreeBall& ball, const MarkedRay& ray, int k) {
  require_radius(ball, 2 * k);
  if (k == 0) return TreeBall::root();
  const VertexId side = ball.child(ray.at(static_cast<std::size_t>(k)), 1);
  return ball.descend_first(side, k - 1);
}

Count horocycle_constant(const TreeBall& ball, const MarkedRay& ray, int m, int n, int k) {
  if (m < 0 || n < 0 || k < 0) throw std::invalid_argument("negative horocycle class");
  require_radius(ball, horocycle_required_radius(m, k));
  const VertexId w = horocycle_witness(ball, ray, k);
  Count count = 0;
  for (VertexId v : horocycle_members(ball, ray, m))
    if (horocycle_class(ball, ray, v, w) == n) ++count;
  return count;
}

Count horocycle_constant(int m, int n, int k, int q, std::size_t max_vertices) {
  const TreeBall ball =
      TreeBall::build(q, q, horocycle_required_radius(m, k), max_vertices);
  return horocycle_constant(ball, MarkedRay::first_child_branch(ball), m, n, k);
}

std::vector<Count> horocycle_product(const TreeBall& ball, const MarkedRay& ray, int m,
                                     int n) {
  const int top = std::max(m, n);
  std::vector<Count> out(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k)
    out[static_cast<std::size_t>(k)] = horocycle_constant(ball, ray, m, n, k);
  return out;
}

}  // namespace hecketree::oracle
