#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hecketree/affine_end.hpp"
#include "hecketree/tree_oracle.hpp"

using namespace hecketree;

namespace {

ToeplitzNF mono(int q, unsigned a, unsigned b, long c = 1) {
  return ToeplitzNF::monomial(q, a, b, Coefficient(c));
}

MElement m(unsigned n, long c = 1) { return m_basis(n, Coefficient(c)); }

}  // namespace

TEST_CASE("normal-form products at q = 2") {
  const auto s = ToeplitzNF::s(2), ss = ToeplitzNF::s_star(2);
  CHECK(nf_multiply(ss, s) == mono(2, 0, 0, 2));
  CHECK(nf_multiply(s, ss) == mono(2, 1, 1));
  const auto e = nf_multiply(s, ss);
  CHECK(nf_multiply(e, e) == mono(2, 1, 1, 2));
  CHECK(nf_multiply(mono(2, 0, 2), mono(2, 3, 0)) == mono(2, 1, 0, 4));
  CHECK(nf_multiply(mono(2, 2, 1), mono(2, 0, 1)) == mono(2, 2, 2));
}

TEST_CASE("normal-form products need equal parameters") {
  CHECK_THROWS_AS(nf_multiply(ToeplitzNF::s(2), ToeplitzNF::s(3)), std::invalid_argument);
}

TEST_CASE("star reverses monomials and conjugates products") {
  CHECK(nf_star(mono(3, 2, 1, 5)) == mono(3, 1, 2, 5));
  CHECK(nf_star(ToeplitzNF::s(3)) == ToeplitzNF::s_star(3));
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b)
      for (unsigned c = 0; c <= 3; ++c)
        for (unsigned d = 0; d <= 3; ++d) {
          const auto x = mono(3, a, b), y = mono(3, c, d);
          CHECK(nf_star(nf_multiply(x, y)) == nf_multiply(nf_star(y), nf_star(x)));
        }
}

TEST_CASE("horocycle basis in normal form") {
  CHECK(m_to_nf(0, 2) == ToeplitzNF::unit(2));
  CHECK(m_to_nf(1, 2) == mono(2, 1, 1) - mono(2, 0, 0));
  CHECK(m_to_nf(3, 2) == mono(2, 3, 3) - mono(2, 2, 2));
  const MElement sum = m(0) + m(1) + m(2) + m(3);
  CHECK(m_to_nf(sum, 2) == mono(2, 3, 3));
  CHECK(nf_to_m(mono(2, 3, 3)) == sum);
  CHECK_THROWS_AS(nf_to_m(ToeplitzNF::s(2)), std::invalid_argument);
}

TEST_CASE("M table at q = 3") {
  CHECK(m_multiply(2, 1, 3) == m(2, 2));
  CHECK(m_multiply(1, 2, 3) == m(2, 2));
  CHECK(m_multiply(1, 1, 3) == m(1) + m(0, 2));
  CHECK(m_multiply(2, 2, 3) == m(2, 3) + m(1, 6) + m(0, 6));
  CHECK(m_multiply(0, 4, 3) == m(4));
}

TEST_CASE("M table agrees with horocycle counting and the normal form") {
  for (int q : {2, 3}) {
    const TreeBall ball = TreeBall::build(q, q, 8);
    const MarkedRay ray = MarkedRay::first_child_branch(ball);
    for (unsigned a = 0; a <= 4; ++a)
      for (unsigned b = 0; b <= 4; ++b) {
        const MElement prod = m_multiply(a, b, q);
        const auto counted = oracle::horocycle_product(ball, ray, static_cast<int>(a), static_cast<int>(b));
        MElement from_count;
        for (unsigned k = 0; k < counted.size(); ++k)
          from_count.add_term({k}, Coefficient(static_cast<long>(counted[k])));
        CHECK(prod == from_count);
        CHECK(m_to_nf(prod, q) == nf_multiply(m_to_nf(a, q), m_to_nf(b, q)));
      }
  }
}

TEST_CASE("R values") {
  CHECK(m_r_value({0}, 3) == 1);
  CHECK(m_r_value({1}, 3) == 2);
  CHECK(m_r_value({3}, 3) == 18);
  const ToeplitzAlgebra alg(3);
  const MAlgebra malg(3);
  for (unsigned n = 0; n <= 5; ++n) {
    Coefficient via_nf;
    const ToeplitzNF nf = m_to_nf(n, 3);
    for (const auto& [idx, c] : nf.terms()) via_nf += c * Coefficient(alg.r_value(idx));
    CHECK(via_nf == Coefficient(malg.r_value({n})));
  }
}

TEST_CASE("sequence picture") {
  const auto one = EventuallyConstantSeq({}, Coefficient(1));
  CHECK(to_sequence(m(0), 2) == one);
  const auto p1 = to_sequence(m(0) + m(1), 2);
  CHECK(p1.at(0) == Coefficient(0));
  CHECK(p1.at(1) == Coefficient(2));
  CHECK(p1.at(7) == Coefficient(2));
  const auto m2 = to_sequence(m(2), 3);
  CHECK(m2.at(0) == Coefficient(0));
  CHECK(m2.at(1) == Coefficient(-3));
  CHECK(m2.at(2) == Coefficient(6));
  CHECK(m2.at(9) == Coefficient(6));
}

TEST_CASE("sequence map is multiplicative and invertible") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int q : {2, 3, 4}) {
    const MAlgebra alg(q);
    for (int trial = 0; trial < 25; ++trial) {
      MElement x, y;
      for (unsigned k = 0; k <= 3; ++k) {
        x.add_term({k}, Coefficient(coef(rng)));
        y.add_term({k}, Coefficient(coef(rng)));
      }
      CHECK(to_sequence(multiply(alg, x, y), q) == to_sequence(x, q) * to_sequence(y, q));
      CHECK(from_sequence(to_sequence(x, q), q) == x);
    }
  }
}

TEST_CASE("projections") {
  for (int q : {2, 3}) {
    CHECK(p_projection(0, q) == ToeplitzNF::unit(q));
    for (unsigned i = 0; i <= 5; ++i) {
      const auto pi = p_projection(i, q);
      CHECK(nf_multiply(pi, pi) == pi);
      CHECK(nf_star(pi) == pi);
      for (unsigned j = i; j <= 5; ++j) CHECK(nf_multiply(pi, p_projection(j, q)) == p_projection(j, q));
      const auto qi = q_projection(i, q);
      for (unsigned j = 0; j <= 5; ++j)
        CHECK(nf_multiply(qi, q_projection(j, q)) ==
              (i == j ? qi : ToeplitzNF(q)));
    }
  }
  const auto seq = to_sequence(nf_to_m(p_projection(2, 2)), 2);
  CHECK(seq == EventuallyConstantSeq({Coefficient(0), Coefficient(0)}, Coefficient(1)));
}

TEST_CASE("normalized generator is an isometry") {
  for (int q : {2, 3, 4}) {
    const auto s = ToeplitzNF::s(q);
    const auto ss = ToeplitzNF::s_star(q);
    CHECK(nf_multiply(ss, s) == mono(q, 0, 0, q));
    const auto e = nf_multiply(s, ss);
    CHECK(nf_multiply(e, e) == Coefficient(q) * e);
    CHECK_FALSE(e == mono(q, 0, 0, q));
  }
}

TEST_CASE("Toeplitz diagram and shift stage shapes") {
  const BratteliDiagram d = toeplitz_bratteli_diagram(4);
  CHECK_NOTHROW(d.validate());
  REQUIRE(d.levels.size() == 4);
  REQUIRE(d.maps.size() == 3);
  CHECK(d.levels[2].size() == 3);
  CHECK(d.maps[1] == IntegerMatrix{{1, 0}, {0, 1}, {0, 1}});
  const ShiftStage st = toeplitz_shift_stage(3);
  CHECK(st.alpha == IntegerMatrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(st.inclusion == IntegerMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}});
}
