#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace hecketree {

using Integer = mpz_class;

/// q^e as an arbitrary-precision integer.
Integer ipow(long base, unsigned long exponent);

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Coefficient {
 public:
  Coefficient() = default;

  template <std::signed_integral T>
  Coefficient(T v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Coefficient(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT

  Coefficient(const Integer& v) : value_(v) {}  // NOLINT(implicit)

  /// num/den, reduced. Throws std::domain_error on a zero denominator.
  Coefficient(const Integer& num, const Integer& den);

  /// Accepts "a" or "a/b" with optional leading minus sign.
  static Coefficient parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Canonical "num/den" form, including "/1" for integers.
  std::string to_string() const;

  Coefficient& operator+=(const Coefficient& o) {
    value_ += o.value_;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    value_ -= o.value_;
    return *this;
  }
  Coefficient& operator*=(const Coefficient& o) {
    value_ *= o.value_;
    return *this;
  }
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) {
    return a += b;
  }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) {
    return a -= b;
  }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) {
    return a *= b;
  }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) {
    return a /= b;
  }
  friend Coefficient operator-(const Coefficient& a) {
    Coefficient r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Coefficient& a,
                                          const Coefficient& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) {
    return os << c.to_string();
  }

 private:
  mpq_class value_{0};
};

}  // namespace hecketree
