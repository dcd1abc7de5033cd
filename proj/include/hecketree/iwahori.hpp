#pragma once

// Hecke algebra of a strongly transitive tree group relative to the fixator
// B of an edge e. Double cosets are indexed by the infinite dihedral group
// W = <s, t>: s and t move e to its two neighbours along an apartment,
// crossing the even-type and odd-type endpoint of e respectively. When the
// group also contains an inversion i of e, the basis is indexed by
// i^eps * w and the algebra is the twisted tensor product of Z/2 (acting by
// the bar automorphism s <-> t) with the type-preserving algebra.
//
// Products are computed from the presentation
//   D_r D_w = q_r D_{rw} + (q_r - 1) D_w   if w begins with r,
//   D_r D_w = D_{rw}                        otherwise,
// (and the mirrored rules on the right), plus D_i^2 = 1, D_i D_s D_i = D_t.

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hecketree/dihedral_word.hpp"
#include "hecketree/hecke_element.hpp"

namespace hecketree {

/// Basis index D_{i^eps w}, kept in i-on-the-left normal form.
struct ExtendedIndex {
  bool iflag = false;
  DihedralWord word;

  ExtendedIndex() = default;
  ExtendedIndex(bool inverted, DihedralWord w) : iflag(inverted), word(w) {}
  ExtendedIndex(DihedralWord w) : word(w) {}  // NOLINT(implicit)

  static ExtendedIndex inversion() { return {true, DihedralWord{}}; }

  /// Optional leading 'i' followed by a reduced word over {s,t}; "1" is the
  /// identity and "i" the bare inversion.
  static ExtendedIndex parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ExtendedIndex&, const ExtendedIndex&) = default;
  friend std::strong_ordering operator<=>(const ExtendedIndex& a,
                                          const ExtendedIndex& b) {
    if (auto c = a.iflag <=> b.iflag; c != 0) return c;
    return a.word <=> b.word;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedIndex& x) {
    return os << x.to_string();
  }
};

/// Branching numbers q_s, q_t, i.e. R(D_s) and R(D_t).
class IwahoriParams {
 public:
  IwahoriParams(int qs, int qt);

  int qs() const { return qs_; }
  int qt() const { return qt_; }
  int q(Letter r) const { return r == Letter::s ? qs_ : qt_; }
  /// The inversion extension needs bar to be an algebra automorphism.
  bool admits_inversion() const { return qs_ == qt_; }

 private:
  int qs_;
  int qt_;
};

using IwahoriElement = HeckeElement<ExtendedIndex>;

enum class Side { left, right };

/// Product of q over the letters of w; the inversion contributes 1.
Integer r_value(const ExtendedIndex& idx, const IwahoriParams& p);
/// q_w for a plain word.
Integer q_of_word(const DihedralWord& w, const IwahoriParams& p);

/// Applies D_r on the given side of every term of x.
IwahoriElement multiply_by_generator(Letter r, const IwahoriElement& x, Side side,
                                     const IwahoriParams& p);

/// Applies D_i on the given side of every term of x.
IwahoriElement multiply_by_inversion(const IwahoriElement& x, Side side,
                                     const IwahoriParams& p);

/// Basis product by iterated generator rules and the three inversion rules.
/// Throws std::domain_error if an inverted index is used with qs != qt.
IwahoriElement multiply(const ExtendedIndex& a, const ExtendedIndex& b,
                        const IwahoriParams& p);

/// Closed-form product of two type-preserving basis elements.
IwahoriElement multiply_closed(const DihedralWord& w, const DihedralWord& w2,
                               const IwahoriParams& p);

/// Closed-form product extended to inverted indices through
/// D_{iw}D_{w'} = D_i(D_w D_{w'}), D_w D_{iw'} = D_i(D_{bar w} D_{w'}),
/// D_{iw}D_{iw'} = D_{bar w} D_{w'}.
IwahoriElement multiply_closed(const ExtendedIndex& a, const ExtendedIndex& b,
                               const IwahoriParams& p);

/// Index of the adjoint double coset: (i^eps w)^{-1}.
ExtendedIndex involute(const ExtendedIndex& idx);

/// All basis indices with word length <= max_length, type-preserving first,
/// then (if requested) the inverted ones.
std::vector<ExtendedIndex> iwahori_indices(std::size_t max_length,
                                           bool include_inverted);

/// BasisProvider for the edge-fixator Hecke algebra.
class IwahoriAlgebra {
 public:
  using Index = ExtendedIndex;

  explicit IwahoriAlgebra(IwahoriParams p) : params_(p) {}

  IwahoriElement multiply_basis(const Index& a, const Index& b) const {
    return multiply(a, b, params_);
  }
  Index involute_basis(const Index& a) const { return involute(a); }
  Integer r_value(const Index& a) const { return hecketree::r_value(a, params_); }
  Index unit() const { return {}; }

  const IwahoriParams& params() const { return params_; }

 private:
  IwahoriParams params_;
};

}  // namespace hecketree
