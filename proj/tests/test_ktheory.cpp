#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "hecketree/affine_end.hpp"
#include "hecketree/ktheory.hpp"

using namespace hecketree;

namespace {

void check_smith(const IntegerMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  CHECK(f.U * m * f.V == f.D);
  CHECK(f.D.is_diagonal());
  CHECK(abs(determinant(f.U)) == 1);
  CHECK(abs(determinant(f.V)) == 1);
  const std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(f.D(i, i) >= 0);
    if (i + 1 < k && f.D(i, i) != 0) CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
    if (i + 1 < k && f.D(i, i) == 0) CHECK(f.D(i + 1, i + 1) == 0);
  }
  CHECK(f.rank == rank(m));
}

BratteliDiagram constant_diagram(std::size_t levels, long entry) {
  BratteliDiagram d;
  for (std::size_t k = 0; k < levels; ++k) {
    d.levels.push_back({Integer(1)});
    if (k + 1 < levels) d.maps.push_back(IntegerMatrix{{entry}});
  }
  return d;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  const SmithForm id = smith_normal_form(IntegerMatrix::identity(2));
  CHECK(id.D == IntegerMatrix::identity(2));
  const SmithForm d23 = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  CHECK(d23.D == (IntegerMatrix{{1, 0}, {0, 6}}));
  const SmithForm zero = smith_normal_form(IntegerMatrix{{0}});
  CHECK(zero.D == IntegerMatrix{{0}});
  CHECK(zero.rank == 0);
  check_smith(IntegerMatrix{{2, 0}, {0, 3}});
  check_smith(IntegerMatrix{{4, 6, 8}, {6, 9, 12}});
  check_smith(IntegerMatrix(3, 0));
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    check_smith(m);
    CHECK(rank(m) + kernel_rank(m) == m.cols());
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntegerMatrix{{2, 1}, {7, 4}}) == 1);
  CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntegerMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant(IntegerMatrix{{0, 2, 1}, {3, 0, 0}, {1, 1, 1}}) == -3);
  CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("cokernels and kernels") {
  CHECK(cokernel(IntegerMatrix(2, 2)).free_rank == 2);
  CHECK(kernel_rank(IntegerMatrix(2, 2)) == 2);
  const auto two = cokernel(IntegerMatrix{{2}});
  CHECK(two.free_rank == 0);
  CHECK(two.invariant_factors == std::vector<Integer>{2});
  CHECK(two.to_string() == "Z/2");
  CHECK(cokernel(IntegerMatrix{{2, 0}, {0, 0}}).to_string() == "Z + Z/2");
  CHECK(cokernel(IntegerMatrix::identity(3)).is_trivial());
  CHECK(cokernel(IntegerMatrix::identity(3)).to_string() == "0");
  CHECK(cokernel(IntegerMatrix(2, 1)).to_string() == "Z^2");
}

TEST_CASE("PV groups on square matrices") {
  const PvGroups id3 = pv_k_groups(IntegerMatrix::identity(3));
  CHECK(id3.k0.free_rank == 3);
  CHECK(id3.k0.invariant_factors.empty());
  CHECK(id3.k1_rank == 3);
  const PvGroups zero2 = pv_k_groups(IntegerMatrix(2, 2));
  CHECK(zero2.k0.is_trivial());
  CHECK(zero2.k1_rank == 0);
  IntegerMatrix shift(5, 5);
  for (std::size_t i = 0; i + 1 < 5; ++i) shift(i + 1, i) = 1;
  // I - shift on Z^5 is unipotent, so the square truncation sees nothing.
  const PvGroups sq = pv_k_groups(shift);
  CHECK(sq.k0.is_trivial());
  CHECK(sq.k1_rank == 0);
}

TEST_CASE("PV groups of the Toeplitz shift stage") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const ShiftStage st = toeplitz_shift_stage(n);
    const PvGroups g = pv_k_groups(st.alpha, st.inclusion);
    CHECK(g.k0.free_rank == 1);
    CHECK(g.k0.invariant_factors.empty());
    CHECK(g.k1_rank == 0);
  }
  CHECK_THROWS_AS(pv_k_groups(IntegerMatrix(3, 2), IntegerMatrix(2, 2)), std::invalid_argument);
}

TEST_CASE("truncated limits") {
  const auto c = truncated_limit(constant_diagram(4, 1), 3);
  CHECK(c.stabilized);
  for (const auto& lvl : c.levels) {
    CHECK(lvl.rank == 1);
    CHECK(lvl.composed == IntegerMatrix{{1}});
  }
  const auto doubling = truncated_limit(constant_diagram(5, 2), 4);
  CHECK(doubling.levels[4].composed == IntegerMatrix{{16}});
  CHECK(doubling.levels[4].composed_cokernel.to_string() == "Z/16");
  CHECK_FALSE(doubling.stabilized);

  const auto t = truncated_limit(toeplitz_bratteli_diagram(6), 5);
  for (std::size_t k = 0; k <= 5; ++k) {
    CHECK(t.levels[k].rank == k + 1);
    CHECK(t.levels[k].incoming_injective);
  }
  CHECK_THROWS_AS(truncated_limit(constant_diagram(3, 1), 3), std::invalid_argument);
}

TEST_CASE("inserting an identity level does not change the report") {
  const BratteliDiagram d = toeplitz_bratteli_diagram(4);
  BratteliDiagram e = d;
  e.levels.insert(e.levels.begin() + 2, d.levels[2]);
  e.maps.insert(e.maps.begin() + 2, IntegerMatrix::identity(3));
  const auto a = truncated_limit(d, 3);
  const auto b = truncated_limit(e, 4);
  CHECK(a.levels[3].composed == b.levels[4].composed);
  CHECK(a.levels[3].composed_cokernel == b.levels[4].composed_cokernel);
  CHECK(a.levels[3].composed_kernel_rank == b.levels[4].composed_kernel_rank);
}

TEST_CASE("diagram validation") {
  BratteliDiagram bad = toeplitz_bratteli_diagram(3);
  bad.maps[1] = IntegerMatrix::identity(2);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  BratteliDiagram neg = constant_diagram(2, -1);
  CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
  CHECK_THROWS_AS((IntegerMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("matrix printing") {
  std::ostringstream os;
  os << IntegerMatrix{{1, -2}, {0, 3}};
  CHECK(os.str() == "[[1,-2],[0,3]]");
}
