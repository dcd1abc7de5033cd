#pragma once

// Hecke algebras of the full automorphism group of a homogeneous tree
// relative to the stabilizer M0 of a vertex and an end.
//
// The abelian part C[M, M0] has basis M_n (points of the horocycle whose
// confluence with o is n steps up the ray). The full algebra C[B, M0] is
// generated by [s] = M0 s M0 subject to [s*]^n [s]^n = q^n, so every element
// has a unique normal form sum c_{a,b} [s]^a [s*]^b.

#include <compare>
#include <cstddef>
#include <vector>

#include "hecketree/hecke_element.hpp"
#include "hecketree/ktheory.hpp"

namespace hecketree {

struct MBasisIndex {
  unsigned n = 0;
  friend auto operator<=>(const MBasisIndex&, const MBasisIndex&) = default;
};
using MElement = HeckeElement<MBasisIndex>;

inline MElement m_basis(unsigned n, Coefficient c = Coefficient{1}) {
  return MElement::basis(MBasisIndex{n}, c);
}

/// [s]^a [s*]^b
struct ToeplitzMonomial {
  unsigned a = 0;
  unsigned b = 0;
  friend auto operator<=>(const ToeplitzMonomial&, const ToeplitzMonomial&) = default;
};
using ToeplitzTerms = HeckeElement<ToeplitzMonomial>;

/// Normal-form element together with its branching parameter.
class ToeplitzNF {
 public:
  explicit ToeplitzNF(int q, ToeplitzTerms terms = {});

  static ToeplitzNF unit(int q) { return monomial(q, 0, 0); }
  static ToeplitzNF s(int q) { return monomial(q, 1, 0); }
  static ToeplitzNF s_star(int q) { return monomial(q, 0, 1); }
  static ToeplitzNF monomial(int q, unsigned a, unsigned b, Coefficient c = Coefficient{1});

  int q() const { return q_; }
  const ToeplitzTerms& terms() const { return terms_; }
  Coefficient coefficient(unsigned a, unsigned b) const { return terms_.coefficient({a, b}); }

  friend ToeplitzNF operator+(const ToeplitzNF& x, const ToeplitzNF& y);
  friend ToeplitzNF operator-(const ToeplitzNF& x, const ToeplitzNF& y);
  friend ToeplitzNF operator*(const Coefficient& c, const ToeplitzNF& x) {
    return ToeplitzNF(x.q_, c * x.terms_);
  }
  friend bool operator==(const ToeplitzNF&, const ToeplitzNF&) = default;

 private:
  int q_;
  ToeplitzTerms terms_;
};

/// ([s]^a[s*]^b)([s]^c[s*]^d) = q^min(b,c) [s]^(a+c-min) [s*]^(b+d-min).
/// Throws std::invalid_argument when the parameters differ.
ToeplitzNF nf_multiply(const ToeplitzNF& x, const ToeplitzNF& y);
ToeplitzNF nf_star(const ToeplitzNF& x);

/// M_0 = 1 and M_n = [s]^n[s*]^n - [s]^(n-1)[s*]^(n-1).
ToeplitzNF m_to_nf(unsigned n, int q);
ToeplitzNF m_to_nf(const MElement& x, int q);
/// Inverse on the diagonal span; throws std::invalid_argument on an
/// off-diagonal monomial.
MElement nf_to_m(const ToeplitzNF& x);

/// Closed-form M table.
MElement m_multiply(unsigned m, unsigned n, int q);

Integer m_r_value(MBasisIndex idx, int q);

/// q^-n [s]^n [s*]^n, the projection onto coordinates >= n.
ToeplitzNF p_projection(unsigned n, int q);
/// P_n - P_(n+1), the projection onto coordinate n.
ToeplitzNF q_projection(unsigned n, int q);

/// Sequence x_0, x_1, ... that is constant from prefix.size() on.
class EventuallyConstantSeq {
 public:
  EventuallyConstantSeq() = default;
  EventuallyConstantSeq(std::vector<Coefficient> prefix, Coefficient tail);

  const std::vector<Coefficient>& prefix() const { return prefix_; }
  const Coefficient& tail() const { return tail_; }
  Coefficient at(std::size_t j) const { return j < prefix_.size() ? prefix_[j] : tail_; }

  friend EventuallyConstantSeq operator*(const EventuallyConstantSeq& x,
                                         const EventuallyConstantSeq& y);
  friend EventuallyConstantSeq operator+(const EventuallyConstantSeq& x,
                                         const EventuallyConstantSeq& y);
  friend bool operator==(const EventuallyConstantSeq&, const EventuallyConstantSeq&) = default;

 private:
  void canonicalize();
  std::vector<Coefficient> prefix_;
  Coefficient tail_;
};

EventuallyConstantSeq to_sequence(const MElement& x, int q);
MElement from_sequence(const EventuallyConstantSeq& s, int q);

class MAlgebra {
 public:
  using Index = MBasisIndex;
  explicit MAlgebra(int q);
  MElement multiply_basis(Index a, Index b) const { return m_multiply(a.n, b.n, q_); }
  Index involute_basis(Index a) const { return a; }
  Integer r_value(Index a) const { return m_r_value(a, q_); }
  Index unit() const { return {}; }
  int q() const { return q_; }

 private:
  int q_;
};

/// Normal-form monomials as a basis; R([s]^a[s*]^b) = q^a.
class ToeplitzAlgebra {
 public:
  using Index = ToeplitzMonomial;
  explicit ToeplitzAlgebra(int q);
  ToeplitzTerms multiply_basis(Index x, Index y) const;
  Index involute_basis(Index x) const { return {x.b, x.a}; }
  Integer r_value(Index x) const { return ipow(q_, x.a); }
  Index unit() const { return {}; }
  int q() const { return q_; }

 private:
  int q_;
};

/// Level k is Z^(k+1) (sequences constant from coordinate k); the map to
/// level k+1 duplicates the last coordinate.
BratteliDiagram toeplitz_bratteli_diagram(std::size_t levels);

/// The shift and the inclusion as maps Z^N -> Z^(N+1) at stage N.
struct ShiftStage {
  IntegerMatrix alpha;
  IntegerMatrix inclusion;
};
ShiftStage toeplitz_shift_stage(std::size_t n);

}  // namespace hecketree
