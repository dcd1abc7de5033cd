#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hecketree/tree_oracle.hpp"

using namespace hecketree;
using namespace hecketree::oracle;

TEST_CASE("build_ball: radius 1 has the root and its q+1 neighbours") {
  const TreeBall b = TreeBall::build(2, 2, 1);
  CHECK(b.size() == 4);
  CHECK(b.sphere_size(0) == 1);
  CHECK(b.sphere_size(1) == 3);
}

TEST_CASE("build_ball: sphere sizes (q+1)q^(n-1)") {
  const TreeBall b = TreeBall::build(2, 2, 3);
  CHECK(b.sphere_size(3) == 12);
  const TreeBall c = TreeBall::build(3, 3, 4);
  for (int n = 1; n <= 4; ++n) CHECK(c.sphere_size(n) == static_cast<std::size_t>(4 * hecketree::ipow(3, n - 1).get_si()));
}

TEST_CASE("build_ball: semi-homogeneous sphere of radius 2 has (q0+1)q1 points") {
  const TreeBall b = TreeBall::build(2, 3, 2);
  CHECK(b.sphere_size(2) == 9);
  CHECK(b.sphere_size(1) == 3);
}

TEST_CASE("build_ball: interior degrees follow the vertex type") {
  const TreeBall b = TreeBall::build(2, 3, 4);
  for (VertexId v = 0; v < b.size(); ++v) {
    if (!b.is_interior(v)) continue;
    const std::size_t want = b.type(v) == VertexType::even ? 3 : 4;
    CHECK(b.neighbors(v).size() == want);
  }
  CHECK(b.type(TreeBall::root()) == VertexType::even);
}

TEST_CASE("build_ball: rejects degenerate parameters and oversized balls") {
  CHECK_THROWS_AS(TreeBall::build(1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(TreeBall::build(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(TreeBall::build(2, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(TreeBall::build(4, 4, 12, 1000), std::length_error);
  CHECK(ball_vertex_count(2, 2, 3) == 1 + 3 + 6 + 12);
}

TEST_CASE("distance: basic values and symmetry") {
  const TreeBall b = TreeBall::build(2, 3, 5);
  CHECK(b.distance(0, 0) == 0);
  CHECK(b.distance(0, b.child(0, 1)) == 1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(b.size() - 1));
  for (int i = 0; i < 500; ++i) {
    const VertexId u = pick(rng), v = pick(rng);
    CHECK(b.distance(u, v) == b.distance(v, u));
    CHECK(b.distance(u, v) <= b.depth(u) + b.depth(v));
  }
}

TEST_CASE("spherical_constant: examples at q = 2") {
  CHECK(spherical_constant(1, 1, 0, 2, 2) == 3);
  CHECK(spherical_constant(1, 1, 1, 2, 2) == 0);
  CHECK(spherical_constant(2, 3, 5, 2, 2) == 1);
}

TEST_CASE("spherical_constant: support bound |n-m| <= k <= n+m") {
  const TreeBall b = TreeBall::build(3, 3, 8);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int k = 0; k <= 8; ++k)
        if (k < std::abs(n - m) || k > n + m) CHECK(spherical_constant(b, n, m, k) == 0);
}

TEST_CASE("spherical_constant: mass identity") {
  // With q0 != q1 the sphere sizes around v depend on the type of v, so only
  // even n are counted there.
  for (auto [q0, q1] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const TreeBall b = TreeBall::build(q0, q1, 8);
    for (int n = 0; n <= 4; n += q0 == q1 ? 1 : 2)
      for (int m = 0; m <= 4; ++m) {
        const auto v = spherical_product(b, n, m);
        Count lhs = 0;
        for (std::size_t k = 0; k < v.size(); ++k) lhs += v[k] * b.sphere_size(static_cast<int>(k));
        CHECK(lhs == b.sphere_size(n) * b.sphere_size(m));
      }
  }
}

TEST_CASE("spherical_constant: independent of the witness") {
  const TreeBall b = TreeBall::build(2, 3, 6);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int k = 0; k <= n + m && k <= 6; ++k) {
        const Count ref = spherical_constant(b, n, m, k);
        for (VertexId w : b.sphere(k)) CHECK(spherical_constant_at(b, n, m, w) == ref);
      }
}

TEST_CASE("spherical_constant: refuses a ball that is too small") {
  const TreeBall b = TreeBall::build(2, 2, 3);
  CHECK_THROWS_AS(spherical_constant(b, 2, 2, 4), std::invalid_argument);
  CHECK_NOTHROW(spherical_constant(b, 2, 2, 3));
}

TEST_CASE("weyl_distance: identity, single crossings and length two") {
  const TreeBall b = TreeBall::build(2, 2, 4);
  const Edge e = base_edge(b);
  CHECK(weyl_distance(b, e, e).empty());
  // Crossing the root (even) to another root edge.
  const Edge across_even{b.child(0, 1)};
  CHECK(weyl_distance(b, e, across_even) == DihedralWord::parse("s"));
  // Crossing the odd endpoint to a child edge.
  const VertexId c = b.child(0, 0);
  const Edge across_odd{b.child(c, 0)};
  CHECK(weyl_distance(b, e, across_odd) == DihedralWord::parse("t"));
  // Leave through the even vertex, then through the odd one.
  const Edge two{b.child(b.child(0, 1), 0)};
  CHECK(weyl_distance(b, e, two) == DihedralWord::parse("st"));
}

TEST_CASE("weyl_distance: reversing the pair inverts the word, length is edge distance") {
  const TreeBall b = TreeBall::build(2, 3, 5);
  std::mt19937 rng(5);
  std::uniform_int_distribution<VertexId> pick(1, static_cast<VertexId>(b.size() - 1));
  for (int i = 0; i < 300; ++i) {
    const Edge e{pick(rng)}, f{pick(rng)};
    const DihedralWord w = weyl_distance(b, e, f);
    CHECK(weyl_distance(b, f, e) == inverse(w));
    if (e == f) {
      CHECK(w.empty());
    } else {
      int best = 100;
      for (VertexId x : {e.child, b.parent(e.child)})
        for (VertexId y : {f.child, b.parent(f.child)}) best = std::min(best, b.distance(x, y));
      CHECK(static_cast<int>(w.length()) == best + 1);
    }
  }
}

TEST_CASE("edge witnesses realise every word") {
  const TreeBall b = TreeBall::build(2, 3, 6);
  for (const auto& u : DihedralWord::all_up_to(5))
    CHECK(weyl_distance(b, base_edge(b), edge_witness(b, u)) == u);
  const TreeBall h = TreeBall::build(3, 3, 6);
  for (const auto& u : iwahori_indices(5, true))
    CHECK(weyl_distance(h, base_directed_edge(h), directed_edge_witness(h, u)) == u);
}

TEST_CASE("iwahori_constant: examples at q_s = q_t = 2") {
  const auto s = DihedralWord::parse("s"), t = DihedralWord::parse("t");
  CHECK(iwahori_constant(s, s, DihedralWord{}, 2, 2) == 2);
  CHECK(iwahori_constant(s, t, DihedralWord::parse("st"), 2, 2) == 1);
  CHECK(iwahori_constant(s, s, s, 2, 2) == 1);
}

TEST_CASE("iwahori oracle: bucket sizes are products of q over the letters") {
  const TreeBall b = TreeBall::build(2, 3, 6);
  const IwahoriOracle orc(b, false);
  CHECK(orc.bucket_size(ExtendedIndex(DihedralWord::parse("sts"))) == 12);
  CHECK(orc.bucket_size(ExtendedIndex(DihedralWord::parse("tst"))) == 18);
  CHECK_THROWS_AS(orc.bucket_size(ExtendedIndex(DihedralWord(Letter::s, 6))), std::invalid_argument);
}

TEST_CASE("iwahori oracle: independent of the witness edge") {
  const TreeBall b = TreeBall::build(2, 3, 5);
  const IwahoriOracle orc(b, false);
  const Edge e = base_edge(b);
  for (const auto& w : DihedralWord::all_up_to(2))
    for (const auto& w2 : DihedralWord::all_up_to(2))
      for (const auto& u : DihedralWord::all_up_to(3)) {
        const Count ref = orc.constant(ExtendedIndex(w), ExtendedIndex(w2), ExtendedIndex(u));
        // Every edge g at Weyl distance u from e gives the same count.
        for (VertexId v = 1; v < b.size(); ++v) {
          const Edge g{v};
          if (b.depth(v) > 4 || weyl_distance(b, e, g) != u) continue;
          Count c = 0;
          for (VertexId x = 1; x < b.size(); ++x) {
            const Edge f{x};
            if (weyl_distance(b, e, f) == w && weyl_distance(b, f, g) == w2) ++c;
          }
          CHECK(c == ref);
        }
      }
}

TEST_CASE("oriented oracle needs a homogeneous tree") {
  const TreeBall b = TreeBall::build(2, 3, 3);
  CHECK_THROWS_AS(IwahoriOracle(b, true), std::invalid_argument);
}

TEST_CASE("horocycle_class: examples") {
  const TreeBall b = TreeBall::build(2, 2, 6);
  const MarkedRay ray = MarkedRay::first_child_branch(b);
  CHECK(ray.length() == 6);
  CHECK(horocycle_class(b, ray, 0, 0) == 0);
  const VertexId sibling = b.child(ray.at(1), 1);
  CHECK(horocycle_class(b, ray, 0, sibling) == 1);
  CHECK_THROWS_AS(horocycle_class(b, ray, 0, ray.at(1)), std::invalid_argument);
}

TEST_CASE("horocycle classes have (q-1)q^(n-1) points") {
  for (int q : {2, 3, 4}) {
    const TreeBall b = TreeBall::build(q, q, 8);
    const MarkedRay ray = MarkedRay::first_child_branch(b);
    CHECK(horocycle_members(b, ray, 0).size() == 1);
    for (int n = 1; n <= 4; ++n)
      CHECK(horocycle_members(b, ray, n).size() ==
            static_cast<std::size_t>((q - 1) * hecketree::ipow(q, n - 1).get_si()));
  }
}

TEST_CASE("horocycle_class is symmetric and stable under deepening the ball") {
  const TreeBall small = TreeBall::build(2, 2, 6);
  const TreeBall big = TreeBall::build(2, 2, 9);
  const MarkedRay rs = MarkedRay::first_child_branch(small);
  const MarkedRay rb = MarkedRay::first_child_branch(big);
  std::vector<VertexId> pts;
  for (int m = 0; m <= 3; ++m)
    for (VertexId v : horocycle_members(small, rs, m)) pts.push_back(v);
  for (VertexId u : pts)
    for (VertexId v : pts) {
      const int c = horocycle_class(small, rs, u, v);
      CHECK(c == horocycle_class(small, rs, v, u));
      CHECK(c == horocycle_class(big, rb, u, v));
      CHECK((c == 0) == (u == v));
    }
}

TEST_CASE("horocycle_constant: examples at q = 2") {
  CHECK(horocycle_constant(1, 2, 2, 2) == 1);
  CHECK(horocycle_constant(1, 1, 0, 2) == 1);
  CHECK(horocycle_constant(1, 1, 1, 2) == 0);
}

TEST_CASE("horocycle_constant: independent of the witness") {
  const TreeBall b = TreeBall::build(3, 3, 6);
  const MarkedRay ray = MarkedRay::first_child_branch(b);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k) {
        const Count ref = horocycle_constant(b, ray, m, n, k);
        for (VertexId w : horocycle_members(b, ray, k)) {
          Count c = 0;
          for (VertexId v : horocycle_members(b, ray, m))
            if (horocycle_class(b, ray, v, w) == n) ++c;
          CHECK(c == ref);
        }
      }
}

TEST_CASE("horocycle_constant: refuses a ball that is too small") {
  const TreeBall b = TreeBall::build(2, 2, 4);
  const MarkedRay ray = MarkedRay::first_child_branch(b);
  CHECK_THROWS_AS(horocycle_constant(b, ray, 3, 1, 3), std::invalid_argument);
}
