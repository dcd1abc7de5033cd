#pragma once

// The end-centralizer Hecke algebra of SL2(Q_p) realized inside the group
// algebra of the Pruefer group Q_p/Z_p. A double coset is determined by the
// orbit of an element u = a/p^n under multiplication by squares of units;
// nu sends it to the sum of that orbit, and products are pulled back by
// splitting the support into orbits again.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hecketree/hecke_element.hpp"

namespace hecketree {

inline constexpr unsigned kDefaultSl2DepthBound = 6;

bool is_prime(long p);

/// a / p^depth mod Z_p, with a coprime to p (or the zero element at depth 0).
class PruferElement {
 public:
  PruferElement() = default;
  /// Reduces a mod p^depth and cancels common powers of p.
  PruferElement(long p, long a, unsigned depth);
  static PruferElement zero(long p) { return PruferElement(p, 0, 0); }

  long p() const { return p_; }
  unsigned depth() const { return depth_; }
  long numerator() const { return a_; }
  long modulus() const;
  bool is_zero() const { return a_ == 0; }

  /// "0" or "a/p^depth" written out, e.g. "4/25".
  std::string to_string() const;
  /// Parses "0" or "a/N" where N is a power of p.
  static PruferElement parse(std::string_view text, long p);

  friend auto operator<=>(const PruferElement&, const PruferElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PruferElement& x) {
    return os << x.to_string();
  }

 private:
  long p_ = 2;
  unsigned depth_ = 0;
  long a_ = 0;
};

PruferElement prufer_add(const PruferElement& x, const PruferElement& y);
PruferElement prufer_negate(const PruferElement& x);

/// { v^2 mod p^n : v coprime to p }, sorted.
std::vector<long> unit_squares_mod(long p, unsigned n);

/// Unit-square orbit of u, sorted.
std::vector<PruferElement> orbit(const PruferElement& u);
/// Smallest element of the orbit; the canonical double coset label.
PruferElement orbit_representative(const PruferElement& u);
bool same_double_coset(const PruferElement& u, const PruferElement& v);

struct CosetIndex {
  PruferElement representative;
  friend auto operator<=>(const CosetIndex&, const CosetIndex&) = default;
};

struct OrbitCoset {
  PruferElement representative;
  std::vector<PruferElement> orbit;
};

using PruferGroupElement = HeckeElement<PruferElement>;
using Sl2Element = HeckeElement<CosetIndex>;

CosetIndex coset_of(const PruferElement& u);

/// Sum of the orbit of u with coefficient 1.
PruferGroupElement nu(const PruferElement& u);
PruferGroupElement nu(const Sl2Element& x);

/// Inverse of nu on its image. Throws std::logic_error if the support does
/// not split into full orbits with constant coefficients.
Sl2Element pull_back(const PruferGroupElement& y);

/// Product of two double cosets computed through nu.
Sl2Element sl2_m_multiply(const PruferElement& u, const PruferElement& v);

/// All double cosets of depth <= max_depth ordered by (depth, representative).
/// Throws std::invalid_argument beyond depth_bound or for non-prime p.
std::vector<OrbitCoset> double_cosets(long p, unsigned max_depth,
                                      unsigned depth_bound = kDefaultSl2DepthBound);

class PruferGroupAlgebra {
 public:
  using Index = PruferElement;
  explicit PruferGroupAlgebra(long p);
  PruferGroupElement multiply_basis(const Index& x, const Index& y) const {
    return PruferGroupElement::basis(prufer_add(x, y));
  }
  Index involute_basis(const Index& x) const { return prufer_negate(x); }
  Integer r_value(const Index&) const { return 1; }
  Index unit() const { return PruferElement::zero(p_); }

 private:
  long p_;
};

class Sl2Algebra {
 public:
  using Index = CosetIndex;
  explicit Sl2Algebra(long p);
  Sl2Element multiply_basis(const Index& x, const Index& y) const {
    return sl2_m_multiply(x.representative, y.representative);
  }
  Index involute_basis(const Index& x) const {
    return coset_of(prufer_negate(x.representative));
  }
  /// Number of one-sided cosets: the orbit size.
  Integer r_value(const Index& x) const;
  Index unit() const { return {PruferElement::zero(p_)}; }
  long p() const { return p_; }

 private:
  long p_;
};

}  // namespace hecketree
