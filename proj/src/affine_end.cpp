#include "hecketree/affine_end.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hecketree {

namespace {

void check_q(int q) {
  if (q < 2) throw std::invalid_argument("branching parameter q must be >= 2, got " +
                                         std::to_string(q));
}

void check_same_q(const ToeplitzNF& x, const ToeplitzNF& y) {
  if (x.q() != y.q())
    throw std::invalid_argument("normal forms with different q (" + std::to_string(x.q()) +
                                " and " + std::to_string(y.q()) + ")");
}

Coefficient seq_of_m(unsigned n, std::size_t j, int q) {
  if (n == 0) return 1;
  if (j + 1 < n) return 0;
  if (j + 1 == n) return Coefficient(-ipow(q, n - 1));
  return Coefficient(ipow(q, n) - ipow(q, n - 1));
}

}  // namespace

ToeplitzNF::ToeplitzNF(int q, ToeplitzTerms terms) : q_(q), terms_(std::move(terms)) {
  check_q(q);
}

ToeplitzNF ToeplitzNF::monomial(int q, unsigned a, unsigned b, Coefficient c) {
  return ToeplitzNF(q, ToeplitzTerms::basis({a, b}, c));
}

ToeplitzNF operator+(const ToeplitzNF& x, const ToeplitzNF& y) {
  check_same_q(x, y);
  return ToeplitzNF(x.q_, x.terms_ + y.terms_);
}

ToeplitzNF operator-(const ToeplitzNF& x, const ToeplitzNF& y) {
  check_same_q(x, y);
  return ToeplitzNF(x.q_, x.terms_ - y.terms_);
}

ToeplitzAlgebra::ToeplitzAlgebra(int q) : q_(q) { check_q(q); }

ToeplitzTerms ToeplitzAlgebra::multiply_basis(Index x, Index y) const {
  const unsigned k = std::min(x.b, y.a);
  return ToeplitzTerms::basis({x.a + y.a - k, x.b + y.b - k}, Coefficient(ipow(q_, k)));
}

MAlgebra::MAlgebra(int q) : q_(q) { check_q(q); }

ToeplitzNF nf_multiply(const ToeplitzNF& x, const ToeplitzNF& y) {
  check_same_q(x, y);
  return ToeplitzNF(x.q(), multiply(ToeplitzAlgebra(x.q()), x.terms(), y.terms()));
}

ToeplitzNF nf_star(const ToeplitzNF& x) {
  return ToeplitzNF(x.q(), star(ToeplitzAlgebra(x.q()), x.terms()));
}

ToeplitzNF m_to_nf(unsigned n, int q) {
  if (n == 0) return ToeplitzNF::unit(q);
  return ToeplitzNF::monomial(q, n, n) - ToeplitzNF::monomial(q, n - 1, n - 1);
}

ToeplitzNF m_to_nf(const MElement& x, int q) {
  ToeplitzNF out(q);
  for (const auto& [idx, c] : x) out = out + c * m_to_nf(idx.n, q);
  return out;
}

MElement nf_to_m(const ToeplitzNF& x) {
  MElement out;
  for (const auto& [mono, c] : x.terms()) {
    if (mono.a != mono.b)
      throw std::invalid_argument("normal form has an off-diagonal monomial [s]^" +
                                  std::to_string(mono.a) + "[s*]^" + std::to_string(mono.b));
    for (unsigned i = 0; i <= mono.a; ++i) out.add_term({i}, c);
  }
  return out;
}

MElement m_multiply(unsigned m, unsigned n, int q) {
  check_q(q);
  if (m == 0) return m_basis(n);
  if (n == 0) return m_basis(m);
  if (m != n) {
    const unsigned big = std::max(m, n), small = std::min(m, n);
    return m_basis(big, Coefficient((q - 1) * ipow(q, small - 1)));
  }
  const Integer qm = ipow(q, m - 1);
  MElement out = m_basis(m, Coefficient((q - 2) * qm));
  for (unsigned i = 0; i < m; ++i) out.add_term({i}, Coefficient((q - 1) * qm));
  return out;
}

Integer m_r_value(MBasisIndex idx, int q) {
  if (idx.n == 0) return 1;
  return (q - 1) * ipow(q, idx.n - 1);
}

ToeplitzNF p_projection(unsigned n, int q) {
  return ToeplitzNF::monomial(q, n, n, Coefficient(Integer(1), ipow(q, n)));
}

ToeplitzNF q_projection(unsigned n, int q) {
  return p_projection(n, q) - p_projection(n + 1, q);
}

EventuallyConstantSeq::EventuallyConstantSeq(std::vector<Coefficient> prefix, Coefficient tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  canonicalize();
}

void EventuallyConstantSeq::canonicalize() {
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

EventuallyConstantSeq operator*(const EventuallyConstantSeq& x, const EventuallyConstantSeq& y) {
  const std::size_t n = std::max(x.prefix_.size(), y.prefix_.size());
  std::vector<Coefficient> p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = x.at(j) * y.at(j);
  return {std::move(p), x.tail_ * y.tail_};
}

EventuallyConstantSeq operator+(const EventuallyConstantSeq& x, const EventuallyConstantSeq& y) {
  const std::size_t n = std::max(x.prefix_.size(), y.prefix_.size());
  std::vector<Coefficient> p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = x.at(j) + y.at(j);
  return {std::move(p), x.tail_ + y.tail_};
}

EventuallyConstantSeq to_sequence(const MElement& x, int q) {
  check_q(q);
  unsigned top = 0;
  for (const auto& [idx, c] : x) top = std::max(top, idx.n);
  std::vector<Coefficient> prefix(top);
  Coefficient tail;
  for (const auto& [idx, c] : x) {
    for (std::size_t j = 0; j < top; ++j) prefix[j] += c * seq_of_m(idx.n, j, q);
    tail += c * seq_of_m(idx.n, top, q);
  }
  return {std::move(prefix), tail};
}

MElement from_sequence(const EventuallyConstantSeq& s, int q) {
  check_q(q);
  MElement out = m_basis(0, s.at(0));
  for (std::size_t j = 1; j <= s.prefix().size(); ++j) {
    const Coefficient step = s.at(j) - s.at(j - 1);
    if (step.is_zero()) continue;
    const Coefficient scale = step / Coefficient(ipow(q, j));
    for (unsigned i = 0; i <= j; ++i) out.add_term({i}, scale);
  }
  return out;
}

BratteliDiagram toeplitz_bratteli_diagram(std::size_t levels) {
  if (levels == 0) throw std::invalid_argument("diagram needs at least one level");
  BratteliDiagram d;
  for (std::size_t k = 0; k < levels; ++k) {
    d.levels.emplace_back(k + 1, Integer(1));
    if (k + 1 < levels) {
      IntegerMatrix b(k + 2, k + 1);
      for (std::size_t i = 0; i <= k; ++i) b(i, i) = 1;
      b(k + 1, k) = 1;
      d.maps.push_back(std::move(b));
    }
  }
  return d;
}

ShiftStage toeplitz_shift_stage(std::size_t n) {
  if (n == 0) throw std::invalid_argument("shift stage needs N >= 1");
  ShiftStage st{IntegerMatrix(n + 1, n), IntegerMatrix(n + 1, n)};
  for (std::size_t j = 0; j < n; ++j) {
    st.alpha(j + 1, j) = 1;
    st.inclusion(j, j) = 1;
  }
  st.inclusion(n, n - 1) = 1;
  return st;
}

}  // namespace hecketree
