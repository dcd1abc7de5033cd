#pragma once

// Finitely supported linear combinations of double cosets with exact
// rational coefficients, and the generic algebra operations on them. A family
// of Hecke algebras plugs in through the BasisProvider concept: structure
// constants on basis pairs, the involution on basis indices, and the number
// of one-sided cosets in each double coset (the R-value).

#include <concepts>
#include <cstddef>
#include <map>
#include <utility>

#include "hecketree/coefficient.hpp"

namespace hecketree {

template <typename Index>
class HeckeElement {
 public:
  using index_type = Index;
  using container = std::map<Index, Coefficient>;
  using const_iterator = typename container::const_iterator;

  HeckeElement() = default;

  static HeckeElement basis(Index idx, Coefficient c = Coefficient{1}) {
    HeckeElement x;
    x.add_term(std::move(idx), c);
    return x;
  }

  /// Adds c to the coefficient of idx; a resulting zero is pruned.
  void add_term(const Index& idx, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Coefficient coefficient(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Coefficient{} : it->second;
  }

  const container& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  HeckeElement& operator+=(const HeckeElement& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
    return *this;
  }
  HeckeElement& operator*=(const Coefficient& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, v] : terms_) v *= c;
    return *this;
  }

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    return a += b;
  }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    return a -= b;
  }
  friend HeckeElement operator-(HeckeElement a) { return a *= Coefficient{-1}; }
  friend HeckeElement operator*(const Coefficient& c, HeckeElement a) {
    return a *= c;
  }
  friend HeckeElement operator*(HeckeElement a, const Coefficient& c) {
    return a *= c;
  }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  container terms_;
};

template <typename P>
concept BasisProvider = requires(const P& p, const typename P::Index& a) {
  typename P::Index;
  { p.multiply_basis(a, a) } -> std::convertible_to<HeckeElement<typename P::Index>>;
  { p.involute_basis(a) } -> std::convertible_to<typename P::Index>;
  { p.r_value(a) } -> std::convertible_to<Integer>;
  { p.unit() } -> std::convertible_to<typename P::Index>;
};

template <BasisProvider P>
using ElementOf = HeckeElement<typename P::Index>;

template <typename Index>
HeckeElement<Index> add(const HeckeElement<Index>& x,
                        const HeckeElement<Index>& y) {
  return x + y;
}

template <BasisProvider P>
ElementOf<P> unit_element(const P& provider) {
  return ElementOf<P>::basis(provider.unit());
}

/// Bilinear extension of the provider's basis product.
template <BasisProvider P>
ElementOf<P> multiply(const P& provider, const ElementOf<P>& x,
                      const ElementOf<P>& y) {
  ElementOf<P> result;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      const Coefficient scale = ca * cb;
      for (const auto& [c, cc] : provider.multiply_basis(a, b))
        result.add_term(c, scale * cc);
    }
  }
  return result;
}

/// Conjugate-linear involution; over the rationals conjugation is trivial.
template <BasisProvider P>
ElementOf<P> star(const P& provider, const ElementOf<P>& x) {
  ElementOf<P> result;
  for (const auto& [a, c] : x) result.add_term(provider.involute_basis(a), c);
  return result;
}

/// The R-homomorphism: sum of coefficient times coset count.
template <BasisProvider P>
Coefficient r_hom(const P& provider, const ElementOf<P>& x) {
  Coefficient total;
  for (const auto& [a, c] : x) total += c * Coefficient(provider.r_value(a));
  return total;
}

/// True when every coefficient is a nonnegative integer.
template <typename Index>
bool has_nonnegative_integer_coefficients(const HeckeElement<Index>& x) {
  for (const auto& [idx, c] : x)
    if (!c.is_integer() || c.sign() < 0) return false;
  return true;
}

}  // namespace hecketree
