#pragma once

// Hecke algebra of a vertex stabilizer in a (semi-)homogeneous tree. The
// double coset Gamma_n consists of the automorphisms moving the base vertex o
// to distance n. In a semi-homogeneous tree with q0 != q1 only even distances
// occur and the basis is Gamma_0, Gamma_2, Gamma_4, ...; indices here always
// count basis steps, so index n means Gamma_{2n} in that mode.

#include <compare>
#include <cstddef>
#include <vector>

#include "hecketree/hecke_element.hpp"

namespace hecketree {

class SphericalParams {
 public:
  enum class Mode { homogeneous, two_orbit };

  static SphericalParams homogeneous(int q);
  static SphericalParams two_orbit(int q0, int q1);

  Mode mode() const { return mode_; }
  bool is_two_orbit() const { return mode_ == Mode::two_orbit; }
  /// In homogeneous mode q0() == q1() == q.
  int q0() const { return q0_; }
  int q1() const { return q1_; }
  /// Tree distance covered by one basis step (1 or 2).
  int step() const { return is_two_orbit() ? 2 : 1; }

 private:
  SphericalParams(Mode m, int q0, int q1) : mode_(m), q0_(q0), q1_(q1) {}
  Mode mode_;
  int q0_;
  int q1_;
};

struct SphericalIndex {
  unsigned n = 0;
  friend auto operator<=>(const SphericalIndex&, const SphericalIndex&) = default;
};

using SphericalElement = HeckeElement<SphericalIndex>;

inline SphericalElement gamma(unsigned n, Coefficient c = Coefficient{1}) {
  return SphericalElement::basis(SphericalIndex{n}, c);
}

/// Number of vertices in the sphere reached by the double coset.
Integer r_value(SphericalIndex idx, const SphericalParams& p);

/// Generator T times Gamma_j via the three-term recursion.
SphericalElement generator_times(unsigned j, const SphericalParams& p);

/// Product built only from the recursion: Gamma_j Gamma_m for j = 0..n is
/// obtained by Y_{j+1} = T Y_j - a Y_j - b_j Y_{j-1}.
SphericalElement multiply_recursive(unsigned n, unsigned m, const SphericalParams& p);

/// Complete multiplication table in closed form.
SphericalElement multiply_closed(unsigned n, unsigned m, const SphericalParams& p);

/// Image of x under Gamma_k -> Gamma_k / R(Gamma_k), in the Gamma basis.
SphericalElement normalize(const SphericalElement& x, const SphericalParams& p);

/// Coordinates of x in the normalized basis (coefficient times R).
SphericalElement normalized_coordinates(const SphericalElement& x, const SphericalParams& p);

/// Normalized generator times normalized Gamma_n, in normalized coordinates.
SphericalElement normalized_generator_product(unsigned n, const SphericalParams& p);

/// Coefficients (constant term first) of x as a polynomial in the generator.
std::vector<Coefficient> to_polynomial(const SphericalElement& x, const SphericalParams& p);

/// Inverse of to_polynomial. Trailing zero coefficients are allowed.
SphericalElement from_polynomial(const std::vector<Coefficient>& coeffs,
                                 const SphericalParams& p);

class SphericalAlgebra {
 public:
  using Index = SphericalIndex;

  explicit SphericalAlgebra(SphericalParams p) : params_(p) {}

  SphericalElement multiply_basis(Index a, Index b) const {
    return multiply_closed(a.n, b.n, params_);
  }
  Index involute_basis(Index a) const { return a; }
  Integer r_value(Index a) const { return hecketree::r_value(a, params_); }
  Index unit() const { return {}; }

  const SphericalParams& params() const { return params_; }

 private:
  SphericalParams params_;
};

}  // namespace hecketree
