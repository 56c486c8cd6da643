#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "enumerate.hpp"
#include "error.hpp"
#include "gf2poly.hpp"
#include "number_theory.hpp"
#include "order.hpp"

namespace sparsemul {

/// Exact multiple counts; products of several factors overflow 64 bits fast.
using Count = boost::multiprecision::cpp_int;

/// Primitive factors with pairwise coprime exponents, in fold order.
struct ProductSpec {
  std::vector<FactorSpec> factors;
  Gf2Poly product;
  std::uint64_t exponent = 0;

  static ProductSpec make(std::span<const Gf2Poly> polys) {
    if (polys.empty()) throw HypothesisError("product needs at least one factor");
    ProductSpec spec;
    spec.product = Gf2Poly::one();
    spec.exponent = 1;
    for (const auto& p : polys) spec.factors.push_back(FactorSpec::make(p));
    for (std::size_t a = 0; a < spec.factors.size(); ++a) {
      for (std::size_t b = a + 1; b < spec.factors.size(); ++b) {
        const auto& fa = spec.factors[a];
        const auto& fb = spec.factors[b];
        if (std::gcd(fa.exponent, fb.exponent) != 1)
          throw HypothesisError("exponents " + std::to_string(fa.exponent) + " and " + std::to_string(fb.exponent) +
                                " of " + fa.poly.to_string() + " and " + fb.poly.to_string() + " are not coprime");
        if (!gcd(fa.poly, fb.poly).is_one())
          throw HypothesisError("factors " + fa.poly.to_string() + " and " + fb.poly.to_string() + " share a factor");
      }
    }
    for (const auto& f : spec.factors) {
      spec.product *= f.poly;
      spec.exponent = nt::checked_mul(spec.exponent, f.exponent);
    }
    return spec;
  }

  static ProductSpec make(std::initializer_list<Gf2Poly> polys) {
    return make(std::span<const Gf2Poly>(polys.begin(), polys.size()));
  }

  /// Lexicographically first primitive polynomial for each degree.
  static ProductSpec from_degrees(std::span<const int> degrees) {
    std::vector<Gf2Poly> polys;
    for (int d : degrees) polys.push_back(first_primitive(d));
    return make(polys);
  }

  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& f : factors) out.push_back(f.degree);
    return out;
  }

  [[nodiscard]] int total_degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree;
    return d;
  }

  [[nodiscard]] std::vector<Gf2Poly> polys() const {
    std::vector<Gf2Poly> out;
    for (const auto& f : factors) out.push_back(f.poly);
    return out;
  }
};

namespace detail {

inline Count factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline void require_coprime(const Count& e1, const Count& e2) {
  if (e1 < 1 || e2 < 1) throw HypothesisError("exponents must be positive");
  if (boost::multiprecision::gcd(e1, e2) != 1)
    throw HypothesisError("exponents " + e1.str() + " and " + e2.str() + " are not coprime");
}

}  // namespace detail

/// (e/3 - 1) * N3, requiring e * N3 to be divisible by 3.
inline Count shift_count(const Count& e, const Count& n3) {
  const Count total = e * n3;
  if (total % 3 != 0) throw HypothesisError("e * N3 is not divisible by 3");
  return total / 3 - n3;
}

/// ((t-1)!)^(k-1) * prod N_{r,t}
inline Count lower_bound_t(std::span<const Count> counts, int t) {
  if (counts.empty()) throw HypothesisError("lower_bound_t needs at least one count");
  if (t < 2) throw HypothesisError("lower_bound_t needs t >= 2");
  const Count f = detail::factorial(t - 1);
  Count r = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    r *= counts[i];
    if (i > 0) r *= f;
  }
  return r;
}

/// Exact trinomial count of the product: 2^(k-1) * prod N_{r,3}.
inline Count count3_product(std::span<const Count> counts3) { return lower_bound_t(counts3, 3); }

/// Exact 4-nomial count of f1 * f2 with coprime exponents e1, e2.
inline Count count4_pair(const Count& e1, const Count& e2, const Count& n14, const Count& n24) {
  detail::require_coprime(e1, e2);
  return 6 * n14 * n24 + (e1 - 1) * (e2 - 1) + (3 * (e1 - 1) + 1) * n24 + (3 * (e2 - 1) + 1) * n14;
}

/// Inputs of the two-factor 5-nomial count.
struct PairCounts5 {
  Count e1, e2;
  Count n13, n23;  // trinomial multiples
  Count n15, n25;  // 5-nomial multiples
  Count s1, s2;    // shifted trinomials, (e/3 - 1) * N3
};

/// One labelled summand of the two-factor 5-nomial count. `label` names the
/// pair of multiple shapes that produces it.
struct Term5 {
  std::string_view label;
  Count value;
};

inline constexpr std::array<std::string_view, 9> kCase5Labels = {
    "five x five",          // both sides 5-nomials
    "padded-tri x five",    // x^i1+x^i2+x^k+x^k+1 against a 5-nomial
    "five x padded-tri",
    "shifted x five",       // shifted trinomial plus 1+1 against a 5-nomial
    "five x shifted",
    "shifted x shifted",
    "shifted x padded-tri",
    "padded-tri x shifted",
    "padded-tri x padded-tri",
};

/// The nine summands of the two-factor 5-nomial count, in kCase5Labels order.
inline std::array<Term5, 9> count5_pair_terms(const PairCounts5& c) {
  detail::require_coprime(c.e1, c.e2);
  if (shift_count(c.e1, c.n13) != c.s1 || shift_count(c.e2, c.n23) != c.s2)
    throw HypothesisError("shift-set sizes are inconsistent with (e/3 - 1) * N3");
  const auto& [e1, e2, n13, n23, n15, n25, s1, s2] = c;
  return {{
      {kCase5Labels[0], 24 * n15 * n25},
      {kCase5Labels[1], n13 * n25 * (12 * (e1 - 2) + 8)},
      {kCase5Labels[2], n23 * n15 * (12 * (e2 - 2) + 8)},
      {kCase5Labels[3], 24 * s1 * n25},
      {kCase5Labels[4], 24 * s2 * n15},
      {kCase5Labels[5], 18 * s1 * s2},
      {kCase5Labels[6], s1 * n23 * (12 * (e2 - 3) + 14)},
      {kCase5Labels[7], s2 * n13 * (12 * (e1 - 3) + 14)},
      {kCase5Labels[8], n13 * n23 * (5 * (e1 - 3) * (e2 - 3) + 7 * (e1 - 3) + 7 * (e2 - 3) + 5)},
  }};
}

inline Count count5_pair(const PairCounts5& c) {
  Count sum = 0;
  for (const auto& term : count5_pair_terms(c)) sum += term.value;
  return sum;
}

inline Count count5_pair(const Count& e1, const Count& e2, const Count& n13, const Count& n23, const Count& n15,
                         const Count& n25, const Count& s1, const Count& s2) {
  return count5_pair(PairCounts5{e1, e2, n13, n23, n15, n25, s1, s2});
}

enum class Route { closed_form_pair, recursion, oracle };

inline std::string_view to_string(Route r) {
  switch (r) {
    case Route::closed_form_pair: return "closed_form_pair";
    case Route::recursion: return "recursion";
    case Route::oracle: return "oracle";
  }
  return "?";
}

/// Exponent and counts of one factor or one running prefix f1 f2 ... fr.
struct PrefixStats {
  std::string label;
  Count exponent;
  Count n3;
  Count nt;
  Count shifts;
};

struct CountReport {
  std::vector<int> degrees;
  std::vector<Gf2Poly> polys;
  int weight = 0;
  Count exact;
  Count lower_bound;
  Route route = Route::recursion;
  std::vector<PrefixStats> factors;
  std::vector<PrefixStats> prefixes;
};

/// Per-factor counts by enumeration (N3 via Zech pairs).
inline PrefixStats factor_stats(const FactorSpec& f, int t, std::string label) {
  require_supported_weight(t);
  PrefixStats s;
  s.label = std::move(label);
  s.exponent = f.exponent;
  const auto n3 = count_trinomials(f.poly, f.exponent);
  s.n3 = n3;
  s.nt = t == 3 ? Count(n3) : Count(count_tnomials(f.poly, f.exponent, t));
  s.shifts = shift_count(s.exponent, s.n3);
  return s;
}

/// Combines a prefix with the next factor, treating the prefix as one polynomial.
inline PrefixStats fold_pair(const PrefixStats& prefix, const PrefixStats& next, int t) {
  PrefixStats s;
  s.label = prefix.label + next.label;
  s.exponent = prefix.exponent * next.exponent;
  const std::array<Count, 2> n3s{prefix.n3, next.n3};
  s.n3 = count3_product(n3s);
  s.shifts = shift_count(s.exponent, s.n3);
  switch (t) {
    case 3:
      detail::require_coprime(prefix.exponent, next.exponent);
      s.nt = s.n3;
      break;
    case 4: s.nt = count4_pair(prefix.exponent, next.exponent, prefix.nt, next.nt); break;
    case 5:
      s.nt = count5_pair(prefix.exponent, next.exponent, prefix.n3, next.n3, prefix.nt, next.nt, prefix.shifts,
                         next.shifts);
      break;
    default: require_supported_weight(t);
  }
  return s;
}

/// Exact weight-t count of the product by folding factors left to right.
inline CountReport count_product_recursive(const ProductSpec& spec, int t) {
  require_supported_weight(t);
  CountReport rep;
  rep.degrees = spec.degrees();
  rep.polys = spec.polys();
  rep.weight = t;
  for (std::size_t r = 0; r < spec.factors.size(); ++r)
    rep.factors.push_back(factor_stats(spec.factors[r], t, "f" + std::to_string(r + 1)));
  rep.prefixes.push_back(rep.factors.front());
  for (std::size_t r = 1; r < rep.factors.size(); ++r)
    rep.prefixes.push_back(fold_pair(rep.prefixes.back(), rep.factors[r], t));
  rep.exact = rep.prefixes.back().nt;
  std::vector<Count> nts;
  for (const auto& f : rep.factors) nts.push_back(f.nt);
  rep.lower_bound = lower_bound_t(nts, t);
  rep.route = spec.factors.size() == 1 ? Route::oracle
              : spec.factors.size() == 2 ? Route::closed_form_pair
                                         : Route::recursion;
  return rep;
}

/// Default product-exponent ceiling for the oracle route.
inline constexpr std::uint64_t kDefaultOracleCap = 1024;

/// Weight-t count of the product polynomial by direct residue matching,
/// independent of every closed form.
inline std::uint64_t oracle_count_product(const ProductSpec& spec, int t, std::uint64_t cap = kDefaultOracleCap) {
  require_supported_weight(t);
  if (spec.exponent > cap)
    throw CapExceeded("oracle: product exponent " + std::to_string(spec.exponent) + " exceeds cap " +
                      std::to_string(cap) + "; use the recursion route");
  return count_tnomials(spec.product, spec.exponent, t);
}

}  // namespace sparsemul
