#include "hecketree/coefficient.hpp"

#include <stdexcept>

namespace hecketree {

Integer ipow(long base, unsigned long exponent) {
  Integer result;
  Integer b = base;
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(), exponent);
  return result;
}

Coefficient::Coefficient(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("coefficient with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Coefficient Coefficient::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Coefficient(parse_integer(text));
  return Coefficient(parse_integer(text.substr(0, slash)),
                     parse_integer(text.substr(slash + 1)));
}

std::string Coefficient::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace hecketree
