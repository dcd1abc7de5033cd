#include "hecketree/spherical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hecketree {

namespace {

void check_q(int q, const char* name) {
  if (q < 2)
    throw std::invalid_argument(std::string("spherical parameter ") + name +
                                " must be >= 2, got " + std::to_string(q));
}

// Gamma_j = T Gamma_{j-1} - a Gamma_{j-1} - b(j-1) Gamma_{j-2}.
Coefficient diag_coeff(const SphericalParams& p) {
  return p.is_two_orbit() ? Coefficient(p.q1() - 1) : Coefficient(0);
}

Coefficient lower_coeff(unsigned j, const SphericalParams& p) {
  const int delta = j == 1 ? 1 : 0;
  if (p.is_two_orbit()) return Coefficient((p.q0() + delta) * p.q1());
  return Coefficient(p.q0() + delta);
}

SphericalElement apply_generator(const SphericalElement& x, const SphericalParams& p) {
  SphericalElement out;
  for (const auto& [idx, c] : x)
    for (const auto& [k, ck] : generator_times(idx.n, p)) out.add_term(k, c * ck);
  return out;
}

std::vector<Coefficient> poly_times_t(const std::vector<Coefficient>& f) {
  std::vector<Coefficient> out(f.size() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) out[i + 1] = f[i];
  return out;
}

void axpy(std::vector<Coefficient>& y, const Coefficient& a, const std::vector<Coefficient>& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

/// Polynomials P_0..P_n with Gamma_j = P_j(T).
std::vector<std::vector<Coefficient>> gamma_polynomials(unsigned n, const SphericalParams& p) {
  std::vector<std::vector<Coefficient>> P{{Coefficient(1)}};
  if (n >= 1) P.push_back({Coefficient(0), Coefficient(1)});
  for (unsigned j = 1; j < n; ++j) {
    std::vector<Coefficient> next = poly_times_t(P[j]);
    axpy(next, -diag_coeff(p), P[j]);
    axpy(next, -lower_coeff(j, p), P[j - 1]);
    P.push_back(std::move(next));
  }
  return P;
}

}  // namespace

SphericalParams SphericalParams::homogeneous(int q) {
  check_q(q, "q");
  return SphericalParams(Mode::homogeneous, q, q);
}

SphericalParams SphericalParams::two_orbit(int q0, int q1) {
  check_q(q0, "q0");
  check_q(q1, "q1");
  return SphericalParams(Mode::two_orbit, q0, q1);
}

Integer r_value(SphericalIndex idx, const SphericalParams& p) {
  if (idx.n == 0) return 1;
  if (p.is_two_orbit())
    return Integer(p.q0() + 1) * p.q1() * ipow(static_cast<long>(p.q0()) * p.q1(), idx.n - 1);
  return Integer(p.q0() + 1) * ipow(p.q0(), idx.n - 1);
}

SphericalElement generator_times(unsigned j, const SphericalParams& p) {
  if (j == 0) return gamma(1);
  SphericalElement out = gamma(j + 1);
  out.add_term({j}, diag_coeff(p));
  out.add_term({j - 1}, lower_coeff(j, p));
  return out;
}

SphericalElement multiply_recursive(unsigned n, unsigned m, const SphericalParams& p) {
  if (n > m) std::swap(n, m);
  SphericalElement prev = gamma(m);  // Gamma_0 Gamma_m
  if (n == 0) return prev;
  SphericalElement cur = apply_generator(prev, p);  // Gamma_1 Gamma_m
  for (unsigned j = 1; j < n; ++j) {
    SphericalElement next = apply_generator(cur, p);
    next -= diag_coeff(p) * cur;
    next -= lower_coeff(j, p) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SphericalElement multiply_closed(unsigned n, unsigned m, const SphericalParams& p) {
  if (n > m) std::swap(n, m);
  if (n == 0) return gamma(m);
  const Integer delta = n == m ? 1 : 0;
  SphericalElement out = gamma(m + n);
  if (!p.is_two_orbit()) {
    const long q = p.q0();
    out.add_term({m - n}, Coefficient(ipow(q, n - 1) * (q + delta)));
    for (unsigned l = 1; l < n; ++l)
      out.add_term({m + n - 2 * l}, Coefficient((q - 1) * ipow(q, l - 1)));
    return out;
  }
  const long q0 = p.q0(), q1 = p.q1();
  out.add_term({m - n}, Coefficient(ipow(q1, n) * ipow(q0, n - 1) * (q0 + delta)));
  // q_l is q0 for even l and q1 for odd l.
  Integer running = 1;  // product of q_i for i < l
  for (unsigned l = 1; l <= 2 * n - 1; ++l) {
    const long ql = l % 2 == 0 ? q0 : q1;
    out.add_term({m + n - l}, Coefficient((ql - 1) * running));
    running *= ql;
  }
  return out;
}

SphericalElement normalize(const SphericalElement& x, const SphericalParams& p) {
  SphericalElement out;
  for (const auto& [idx, c] : x) out.add_term(idx, c / Coefficient(r_value(idx, p)));
  return out;
}

SphericalElement normalized_coordinates(const SphericalElement& x, const SphericalParams& p) {
  SphericalElement out;
  for (const auto& [idx, c] : x) out.add_term(idx, c * Coefficient(r_value(idx, p)));
  return out;
}

SphericalElement normalized_generator_product(unsigned n, const SphericalParams& p) {
  const SphericalElement lhs = normalize(gamma(1), p);
  const SphericalElement rhs = normalize(gamma(n), p);
  return normalized_coordinates(multiply(SphericalAlgebra(p), lhs, rhs), p);
}

std::vector<Coefficient> to_polynomial(const SphericalElement& x, const SphericalParams& p) {
  unsigned top = 0;
  for (const auto& [idx, c] : x) top = std::max(top, idx.n);
  const auto P = gamma_polynomials(top, p);
  std::vector<Coefficient> out(1);
  for (const auto& [idx, c] : x) axpy(out, c, P[idx.n]);
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

SphericalElement from_polynomial(const std::vector<Coefficient>& coeffs,
                                 const SphericalParams& p) {
  std::vector<Coefficient> rest = coeffs;
  while (!rest.empty() && rest.back().is_zero()) rest.pop_back();
  SphericalElement out;
  if (rest.empty()) return out;
  const auto P = gamma_polynomials(static_cast<unsigned>(rest.size() - 1), p);
  for (std::size_t d = rest.size(); d-- > 0;) {
    const Coefficient lead = rest[d];
    if (lead.is_zero()) continue;
    out.add_term({static_cast<unsigned>(d)}, lead);
    axpy(rest, -lead, P[d]);
  }
  return out;
}

}  // namespace hecketree
