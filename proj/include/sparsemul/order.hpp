#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2poly.hpp"
#include "number_theory.hpp"

namespace sparsemul {

/// Largest irreducible-factor degree for which 2^d - 1 is factored.
inline constexpr int kMaxFactorDegree = 40;

namespace detail {

inline void require_order_defined(const Gf2Poly& f) {
  if (f.degree() < 1) throw HypothesisError("order undefined: " + f.to_string() + " is constant");
  if (!f.constant_term()) throw HypothesisError("order undefined: " + f.to_string() + " has f(0) = 0");
}

// x^(2^k) mod f.
inline Gf2Poly frobenius_x(int k, const Gf2Poly& f) {
  Gf2Poly h = Gf2Poly::x() % f;
  for (int i = 0; i < k; ++i) h = mulmod(h, h, f);
  return h;
}

inline Gf2Poly lcm(const Gf2Poly& a, const Gf2Poly& b) { return (a * b) / gcd(a, b); }

// Order of x modulo g, where every irreducible factor of the squarefree g
// has degree exactly j.
inline std::uint64_t order_of_equal_degree_block(const Gf2Poly& g, int j) {
  if (j > kMaxFactorDegree)
    throw CapExceeded("order: irreducible factor of degree " + std::to_string(j) + " exceeds supported degree " +
                      std::to_string(kMaxFactorDegree));
  std::uint64_t n = (std::uint64_t{1} << j) - 1;
  for (const auto& pp : nt::factorize(n)) {
    while (n % pp.prime == 0 && pow_x_mod(n / pp.prime, g).is_one()) n /= pp.prime;
  }
  return n;
}

// Distinct-degree split of a squarefree f with f(0) = 1, lcm of block orders.
inline std::uint64_t order_squarefree(const Gf2Poly& f) {
  if (f.degree() < 1) return 1;
  std::uint64_t result = 1;
  Gf2Poly rest = f;
  Gf2Poly h = Gf2Poly::x() % rest;
  for (int j = 1; 2 * j <= rest.degree(); ++j) {
    h = mulmod(h, h, rest);
    const Gf2Poly g = gcd(h + Gf2Poly::x(), rest);
    if (g.degree() >= 1) {
      result = nt::checked_lcm(result, order_of_equal_degree_block(g, j));
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() >= 1) result = nt::checked_lcm(result, order_of_equal_degree_block(rest, rest.degree()));
  return result;
}

}  // namespace detail

/// Product of the distinct irreducible factors of f.
inline Gf2Poly radical(const Gf2Poly& f) {
  if (f.degree() <= 0) return f;
  const Gf2Poly d = f.derivative();
  if (d.is_zero()) return radical(f.square_root());
  const Gf2Poly g = gcd(f, d);
  if (g.is_one()) return f;
  return detail::lcm(f / g, radical(g));
}

/// Rabin's test: x^(2^d) = x mod f, and gcd(x^(2^(d/q)) - x, f) = 1 for
/// every prime q dividing d.
inline bool is_irreducible(const Gf2Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (!f.constant_term()) return false;
  if (!(detail::frobenius_x(d, f) == Gf2Poly::x() % f)) return false;
  for (const auto& pp : nt::factorize(static_cast<std::uint64_t>(d))) {
    const int k = d / static_cast<int>(pp.prime);
    if (!gcd(detail::frobenius_x(k, f) + Gf2Poly::x(), f).is_one()) return false;
  }
  return true;
}

/// Least e > 0 with f | x^e + 1. Squarefree part via distinct-degree
/// blocks; repeated factors multiply the order by a power of two.
inline std::uint64_t order(const Gf2Poly& f) {
  detail::require_order_defined(f);
  const std::uint64_t base = detail::order_squarefree(radical(f));
  std::uint64_t e = base;
  while (!pow_x_mod(e, f).is_one()) e = nt::checked_mul(e, 2);
  return e;
}

/// lcm of the factor orders; factors must be pairwise coprime.
inline std::uint64_t product_order(std::span<const Gf2Poly> factors) {
  if (factors.empty()) throw HypothesisError("product_order: no factors");
  for (std::size_t a = 0; a < factors.size(); ++a) {
    detail::require_order_defined(factors[a]);
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      if (!gcd(factors[a], factors[b]).is_one())
        throw HypothesisError("product_order: common factor between " + factors[a].to_string() + " and " +
                              factors[b].to_string());
    }
  }
  std::uint64_t e = 1;
  for (const auto& f : factors) e = nt::checked_lcm(e, order(f));
  return e;
}

inline bool is_primitive(const Gf2Poly& f) {
  const int d = f.degree();
  if (d < 1 || !f.constant_term()) return false;
  if (!is_irreducible(f)) return false;
  return order(f) == (std::uint64_t{1} << d) - 1;
}

/// A primitive factor with its degree and exponent 2^d - 1.
struct FactorSpec {
  Gf2Poly poly;
  int degree = 0;
  std::uint64_t exponent = 0;

  static FactorSpec make(const Gf2Poly& p) {
    if (p.degree() > kMaxFactorDegree)
      throw CapExceeded("factor degree " + std::to_string(p.degree()) + " exceeds " + std::to_string(kMaxFactorDegree));
    if (!is_primitive(p)) throw HypothesisError("factor " + p.to_string() + " is not primitive");
    return {p, p.degree(), (std::uint64_t{1} << p.degree()) - 1};
  }
};

/// Every primitive polynomial of degree d, ascending by coefficient mask.
inline std::vector<Gf2Poly> primitive_polynomials(int d) {
  if (d < 1 || d > 30) throw CapExceeded("primitive_polynomials: degree must lie in [1, 30]");
  std::vector<Gf2Poly> out;
  const std::uint64_t top = std::uint64_t{1} << d;
  for (std::uint64_t mask = top | 1; mask < (top << 1); mask += 2) {
    const auto p = Gf2Poly::from_mask(mask);
    if (is_primitive(p)) out.push_back(p);
  }
  return out;
}

/// Primitive polynomial of degree d with the smallest coefficient mask.
inline Gf2Poly first_primitive(int d) {
  if (d < 1 || d > kMaxFactorDegree) throw CapExceeded("first_primitive: degree must lie in [1, 40]");
  const std::uint64_t top = std::uint64_t{1} << d;
  for (std::uint64_t mask = top | 1; mask < (top << 1); mask += 2) {
    const auto p = Gf2Poly::from_mask(mask);
    if (is_primitive(p)) return p;
  }
  throw HypothesisError("no primitive polynomial of degree " + std::to_string(d));
}

}  // namespace sparsemul
