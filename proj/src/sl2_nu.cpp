#include "hecketree/sl2_nu.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <stdexcept>

namespace hecketree {

namespace {

long checked_power(long p, unsigned n) {
  long out = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (out > std::numeric_limits<long>::max() / (p * p))
      throw std::overflow_error("p^depth does not fit in a machine integer");
    out *= p;
  }
  return out;
}

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

void check_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
}

long parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PruferElement::PruferElement(long p, long a, unsigned depth) : p_(p), depth_(depth) {
  check_prime(p);
  a_ = mod(a, checked_power(p, depth));
  while (depth_ > 0 && a_ % p_ == 0) {
    a_ /= p_;
    --depth_;
  }
  if (a_ == 0) depth_ = 0;
}

long PruferElement::modulus() const { return checked_power(p_, depth_); }

std::string PruferElement::to_string() const {
  if (is_zero()) return "0";
  return std::to_string(a_) + "/" + std::to_string(modulus());
}

PruferElement PruferElement::parse(std::string_view text, long p) {
  if (text == "0") return zero(p);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("expected a/N for a Pruefer element, got '" +
                                std::string(text) + "'");
  const long a = parse_long(text.substr(0, slash));
  long n = parse_long(text.substr(slash + 1));
  unsigned depth = 0;
  while (n > 1 && n % p == 0) {
    n /= p;
    ++depth;
  }
  if (n != 1)
    throw std::invalid_argument("denominator in '" + std::string(text) +
                                "' is not a power of " + std::to_string(p));
  return PruferElement(p, a, depth);
}

PruferElement prufer_add(const PruferElement& x, const PruferElement& y) {
  if (x.p() != y.p()) throw std::invalid_argument("Pruefer elements for different primes");
  const unsigned d = std::max(x.depth(), y.depth());
  const long mx = checked_power(x.p(), d - x.depth());
  const long my = checked_power(x.p(), d - y.depth());
  const long m = checked_power(x.p(), d);
  return PruferElement(x.p(), mod(x.numerator() * mx, m) + mod(y.numerator() * my, m), d);
}

PruferElement prufer_negate(const PruferElement& x) {
  return PruferElement(x.p(), -x.numerator(), x.depth());
}

std::vector<long> unit_squares_mod(long p, unsigned n) {
  check_prime(p);
  if (n == 0) return {0};
  const long m = checked_power(p, n);
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (long v = 1; v < m; ++v)
    if (v % p != 0) seen[static_cast<std::size_t>((v * v) % m)] = 1;
  std::vector<long> out;
  for (long r = 0; r < m; ++r)
    if (seen[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

std::vector<PruferElement> orbit(const PruferElement& u) {
  if (u.is_zero()) return {u};
  std::vector<PruferElement> out;
  for (long w : unit_squares_mod(u.p(), u.depth()))
    out.emplace_back(u.p(), w * u.numerator(), u.depth());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PruferElement orbit_representative(const PruferElement& u) { return orbit(u).front(); }

bool same_double_coset(const PruferElement& u, const PruferElement& v) {
  if (u.p() != v.p()) throw std::invalid_argument("Pruefer elements for different primes");
  return orbit_representative(u) == orbit_representative(v);
}

CosetIndex coset_of(const PruferElement& u) { return {orbit_representative(u)}; }

PruferGroupElement nu(const PruferElement& u) {
  PruferGroupElement out;
  for (const PruferElement& h : orbit(u)) out.add_term(h, 1);
  return out;
}

PruferGroupElement nu(const Sl2Element& x) {
  PruferGroupElement out;
  for (const auto& [idx, c] : x) out += c * nu(idx.representative);
  return out;
}

Sl2Element pull_back(const PruferGroupElement& y) {
  std::map<PruferElement, std::vector<std::pair<PruferElement, Coefficient>>> by_rep;
  for (const auto& [h, c] : y) by_rep[orbit_representative(h)].emplace_back(h, c);
  Sl2Element out;
  for (const auto& [rep, members] : by_rep) {
    const std::vector<PruferElement> full = orbit(rep);
    if (members.size() != full.size())
      throw std::logic_error("support meets the orbit of " + rep.to_string() +
                             " in " + std::to_string(members.size()) + " of " +
                             std::to_string(full.size()) + " points");
    for (const auto& [h, c] : members)
      if (c != members.front().second)
        throw std::logic_error("coefficients vary along the orbit of " + rep.to_string());
    out.add_term({rep}, members.front().second);
  }
  return out;
}

Sl2Element sl2_m_multiply(const PruferElement& u, const PruferElement& v) {
  const PruferGroupElement prod = multiply(PruferGroupAlgebra(u.p()), nu(u), nu(v));
  const unsigned bound = std::max(u.depth(), v.depth());
  for (const auto& [h, c] : prod)
    if (h.depth() > bound) throw std::logic_error("product left the depth of its factors");
  return pull_back(prod);
}

std::vector<OrbitCoset> double_cosets(long p, unsigned max_depth, unsigned depth_bound) {
  check_prime(p);
  if (max_depth > depth_bound)
    throw std::invalid_argument("depth " + std::to_string(max_depth) +
                                " exceeds the configured bound " + std::to_string(depth_bound));
  std::vector<OrbitCoset> out{{PruferElement::zero(p), {PruferElement::zero(p)}}};
  for (unsigned n = 1; n <= max_depth; ++n) {
    const long m = checked_power(p, n);
    const std::vector<long> squares = unit_squares_mod(p, n);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (long a = 1; a < m; ++a) {
      if (a % p == 0 || used[static_cast<std::size_t>(a)]) continue;
      OrbitCoset c;
      for (long w : squares) {
        const long b = (w * a) % m;
        if (!used[static_cast<std::size_t>(b)]) {
          used[static_cast<std::size_t>(b)] = 1;
          c.orbit.emplace_back(p, b, n);
        }
      }
      std::sort(c.orbit.begin(), c.orbit.end());
      c.representative = c.orbit.front();
      out.push_back(std::move(c));
    }
  }
  return out;
}

PruferGroupAlgebra::PruferGroupAlgebra(long p) : p_(p) { check_prime(p); }

Sl2Algebra::Sl2Algebra(long p) : p_(p) { check_prime(p); }

Integer Sl2Algebra::r_value(const Index& x) const {
  return static_cast<unsigned long>(orbit(x.representative).size());
}

}  // namespace hecketree
