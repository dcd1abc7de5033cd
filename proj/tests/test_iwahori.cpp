#include <doctest.h>

#include <stdexcept>

#include "hecketree/iwahori.hpp"
#include "hecketree/tree_oracle.hpp"

using namespace hecketree;

namespace {

DihedralWord w(std::string_view s) { return DihedralWord::parse(s); }
ExtendedIndex x(std::string_view s) { return ExtendedIndex::parse(s); }
IwahoriElement d(std::string_view s, long c = 1) {
  return IwahoriElement::basis(x(s), Coefficient(c));
}

}  // namespace

TEST_CASE("word helpers") {
  CHECK(word_concat(w("s"), w("t")) == w("st"));
  CHECK(bar(w("sts")) == w("tst"));
  CHECK(inverse(w("st")) == w("ts"));
  CHECK(inverse(w("sts")) == w("sts"));
  CHECK(DihedralWord::all_up_to(2).size() == 5);
}

TEST_CASE("r_value is the product of branching numbers") {
  const IwahoriParams p(2, 3);
  CHECK(r_value(x("sts"), p) == 12);
  CHECK(r_value(x("tst"), p) == 18);
  CHECK(r_value(x("1"), p) == 1);
  const IwahoriParams h(3, 3);
  CHECK(r_value(x("i"), h) == 1);
  CHECK(r_value(x("ist"), h) == 9);
}

TEST_CASE("generator products at q = 2") {
  const IwahoriParams p(2, 2);
  CHECK(multiply(x("s"), x("s"), p) == d("1", 2) + d("s"));
  CHECK(multiply(x("s"), x("t"), p) == d("st"));
  CHECK(multiply(x("s"), x("st"), p) == d("t", 2) + d("st"));
  CHECK(multiply(x("st"), x("ts"), p) == d("1", 4) + d("s", 2) + d("sts"));
}

TEST_CASE("inversion relations") {
  const IwahoriParams p(3, 3);
  CHECK(multiply(x("i"), x("i"), p) == d("1"));
  const auto is = multiply(x("i"), x("s"), p);
  CHECK(is == d("is"));
  CHECK(multiply(x("is"), x("i"), p) == d("t"));
  for (const auto& u : DihedralWord::all_up_to(4)) {
    const auto left = multiply(x("i"), ExtendedIndex(u), p);
    IwahoriElement conj;
    for (const auto& [idx, c] : left) conj += c * multiply(idx, x("i"), p);
    CHECK(conj == IwahoriElement::basis(ExtendedIndex(bar(u))));
  }
}

TEST_CASE("inversion needs equal branching numbers") {
  const IwahoriParams p(2, 3);
  CHECK_FALSE(p.admits_inversion());
  CHECK_THROWS_AS(multiply(x("i"), x("s"), p), std::domain_error);
  CHECK_THROWS_AS(multiply_closed(x("is"), x("t"), p), std::domain_error);
  CHECK_NOTHROW(multiply(x("s"), x("t"), p));
}

TEST_CASE("closed form matches the generator rules") {
  for (auto [qs, qt] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 3}}) {
    const IwahoriParams p(qs, qt);
    for (const auto& a : DihedralWord::all_up_to(4))
      for (const auto& b : DihedralWord::all_up_to(4))
        CHECK(multiply_closed(a, b, p) == multiply(a, b, p));
  }
  const IwahoriParams h(3, 3);
  for (const auto& a : iwahori_indices(3, true))
    for (const auto& b : iwahori_indices(3, true))
      CHECK(multiply_closed(a, b, h) == multiply(a, b, h));
}

TEST_CASE("closed form examples") {
  const IwahoriParams p(2, 3);
  // D_ts D_s = q_s D_t + (q_s - 1) D_ts.
  CHECK(multiply_closed(w("ts"), w("s"), p) == d("t", 2) + d("ts"));
  CHECK(multiply_closed(w("st"), w("ts"), p) == d("1", 6) + d("s", 3) + d("sts", 2));
  CHECK(multiply_closed(w("s"), w("t"), p) == d("st"));
}

TEST_CASE("type-preserving products agree with edge counting") {
  for (auto [qs, qt] : {std::pair{2, 2}, std::pair{2, 3}}) {
    const IwahoriParams p(qs, qt);
    const TreeBall ball = TreeBall::build(qs, qt, 7);
    const oracle::IwahoriOracle orc(ball, false);
    for (const auto& a : DihedralWord::all_up_to(3))
      for (const auto& b : DihedralWord::all_up_to(3)) {
        const auto prod = multiply_closed(a, b, p);
        const auto counted = orc.product(a, b);
        IwahoriElement as_elem;
        for (const auto& [u, c] : counted) as_elem.add_term(u, Coefficient(static_cast<long>(c)));
        CHECK(prod == as_elem);
      }
  }
}

TEST_CASE("products with the inversion agree with oriented edge counting") {
  const IwahoriParams p(2, 2);
  const TreeBall ball = TreeBall::build(2, 2, 6);
  const oracle::IwahoriOracle orc(ball, true);
  for (const auto& a : iwahori_indices(2, true))
    for (const auto& b : iwahori_indices(2, true)) {
      const auto prod = multiply(a, b, p);
      IwahoriElement as_elem;
      for (const auto& [u, c] : orc.product(a, b))
        as_elem.add_term(u, Coefficient(static_cast<long>(c)));
      CHECK(prod == as_elem);
    }
}

TEST_CASE("associativity on short words") {
  const IwahoriParams p(2, 3);
  const IwahoriAlgebra alg(p);
  const auto idx = iwahori_indices(3, false);
  for (const auto& a : idx)
    for (const auto& b : idx)
      for (const auto& c : idx) {
        const auto A = IwahoriElement::basis(a), B = IwahoriElement::basis(b),
                   C = IwahoriElement::basis(c);
        CHECK(multiply(alg, multiply(alg, A, B), C) == multiply(alg, A, multiply(alg, B, C)));
      }
}

TEST_CASE("involution and R on basis products") {
  const IwahoriParams p(3, 3);
  const IwahoriAlgebra alg(p);
  for (const auto& a : iwahori_indices(2, true))
    for (const auto& b : iwahori_indices(2, true)) {
      const auto A = IwahoriElement::basis(a), B = IwahoriElement::basis(b);
      const auto AB = multiply(alg, A, B);
      CHECK(star(alg, AB) == multiply(alg, star(alg, B), star(alg, A)));
      CHECK(r_hom(alg, AB) == r_hom(alg, A) * r_hom(alg, B));
    }
  CHECK(involute(x("ist")) == x("ist"));
  CHECK(involute(x("is")) == x("it"));
  CHECK(involute(x("its")) == x("its"));
  CHECK(involute(x("st")) == x("ts"));
}

TEST_CASE("parse and print") {
  CHECK(x("1").to_string() == "1");
  CHECK(x("i").iflag);
  CHECK(x("i").word.empty());
  CHECK(x("ists").to_string() == "ists");
  CHECK(x("sts").to_string() == "sts");
  CHECK_THROWS(ExtendedIndex::parse("ss"));
  CHECK_THROWS(ExtendedIndex::parse("x"));
  CHECK(iwahori_indices(2, false).size() == 5);
  CHECK(iwahori_indices(2, true).size() == 10);
}
