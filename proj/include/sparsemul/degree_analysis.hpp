#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "gf2poly.hpp"
#include "tables.hpp"
#include "tnomial.hpp"

namespace sparsemul {

/// Least-degree search never looks past this degree.
inline constexpr std::uint64_t kDefaultMaxSearchDegree = std::uint64_t{1} << 20;

/// Weight-t multiples of `poly` of minimal degree (at most max_degree and
/// below `e`). Degrees are scanned upward from deg(poly); within a degree the
/// lower exponents run through colex order, so hits come out sorted by their
/// decreasing exponent lists. With all_ties == false only the first is kept.
inline std::vector<Tnomial> least_tnomial_multiples(const Gf2Poly& poly, std::uint64_t e, int t,
                                                    std::uint64_t max_degree, bool all_ties) {
  if (t < 3) throw HypothesisError("least-degree search needs t >= 3");
  if (poly.degree() < 1 || !poly.constant_term()) throw HypothesisError("least-degree search needs poly(0) = 1");
  const auto mask = poly.mask();
  const int dp = poly.degree();
  const std::uint64_t limit = std::min(e - 1, max_degree);
  const auto m = static_cast<std::size_t>(t - 2);

  std::vector<std::uint64_t> r{1};
  auto residue = [&](std::uint64_t i) {
    while (r.size() <= i) r.push_back(detail::times_x(r.back(), mask, dp));
    return r[i];
  };

  std::vector<Tnomial> hits;
  std::vector<std::uint64_t> c(m);
  for (std::uint64_t j = static_cast<std::uint64_t>(dp); j <= limit; ++j) {
    if (j - 1 < m) continue;
    const auto target = residue(j) ^ 1u;
    for (std::size_t i = 0; i < m; ++i) c[i] = i + 1;
    while (true) {
      std::uint64_t acc = 0;
      for (auto v : c) acc ^= r[v];
      if (acc == target) {
        std::vector<std::uint64_t> exps{j};
        exps.insert(exps.end(), c.rbegin(), c.rend());
        hits.emplace_back(std::move(exps));
        if (!all_ties) return hits;
      }
      std::size_t i = 0;
      while (i < m && c[i] + 1 >= (i + 1 < m ? c[i + 1] : j)) ++i;
      if (i == m) break;
      ++c[i];
      for (std::size_t k = 0; k < i; ++k) c[k] = k + 1;
    }
    if (!hits.empty()) return hits;
  }
  if (limit < e - 1)
    throw CapExceeded("least-degree search: no weight-" + std::to_string(t) + " multiple up to degree cap " +
                      std::to_string(limit));
  throw HypothesisError("least-degree search: no weight-" + std::to_string(t) + " multiple of degree below " +
                        std::to_string(e));
}

/// Minimal-degree weight-t multiple of the product, ties broken by the
/// smallest decreasing exponent list.
inline Tnomial least_tnomial_multiple(const ProductSpec& spec, int t,
                                      std::uint64_t max_degree = kDefaultMaxSearchDegree) {
  return least_tnomial_multiples(spec.product, spec.exponent, t, max_degree, false).front();
}

/// Every weight-t multiple attaining the least degree.
inline std::vector<Tnomial> least_tnomial_multiple_ties(const ProductSpec& spec, int t,
                                                        std::uint64_t max_degree = kDefaultMaxSearchDegree) {
  return least_tnomial_multiples(spec.product, spec.exponent, t, max_degree, true);
}

inline Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

struct EstimateReport {
  Count exact_count;
  std::uint64_t exponent = 0;
  int total_degree = 0;
  int weight = 0;
  double crude_c = 0.0;
  std::uint64_t refined_c = 0;
  std::optional<std::uint64_t> observed_least_degree;
};

/// crude_c = 2^(d/(t-1)); refined_c = least c with
/// C(c, t-1) * N >= C(e-1, t-1), found by bisection on exact integers.
inline EstimateReport estimate_least_degree(const Count& n, std::uint64_t e, int d, int t) {
  if (n < 1) throw HypothesisError("no multiples; estimate undefined");
  if (t < 3) throw HypothesisError("estimate needs t >= 3");
  if (d < 1 || e <= static_cast<std::uint64_t>(d)) throw HypothesisError("estimate needs e > d >= 1");
  const auto k = static_cast<std::uint64_t>(t - 1);
  if (e - 1 < k) throw HypothesisError("estimate needs e - 1 >= t - 1");
  EstimateReport rep;
  rep.exact_count = n;
  rep.exponent = e;
  rep.total_degree = d;
  rep.weight = t;
  rep.crude_c = std::pow(2.0, static_cast<double>(d) / static_cast<double>(t - 1));
  const Count all = binomial(e - 1, k);
  std::uint64_t lo = k, hi = e - 1;
  while (lo < hi) {
    const auto mid = lo + (hi - lo) / 2;
    if (binomial(mid, k) * n >= all) hi = mid;
    else lo = mid + 1;
  }
  rep.refined_c = lo;
  return rep;
}

enum class Verdict { conjecture_holds, counterexample, not_applicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::conjecture_holds: return "conjecture_holds";
    case Verdict::counterexample: return "counterexample";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Exponents I_v and I_w (1-based, v < w) congruent modulo factor r's exponent.
struct ResidueCollision {
  std::size_t factor;
  std::size_t v;
  std::size_t w;
  std::uint64_t residue;
  friend bool operator==(const ResidueCollision&, const ResidueCollision&) = default;
};

struct ZeroSlot {
  std::size_t factor;
  std::size_t v;
  friend bool operator==(const ZeroSlot&, const ZeroSlot&) = default;
};

struct ConjectureReport {
  ProductSpec product;
  int weight = 0;
  int product_weight = 0;
  std::vector<std::uint64_t> factor_counts;  // N_{r,t}
  bool weight_in_range = false;              // 4 <= t < tau
  bool all_factor_counts_positive = false;
  Tnomial least_multiple;
  std::vector<std::vector<std::uint64_t>> residues;  // [r][v] = I_v mod e_r
  std::vector<ResidueCollision> collisions;
  std::vector<ZeroSlot> zero_slots;  // informational only
  Verdict verdict = Verdict::not_applicable;

  [[nodiscard]] bool applicable() const noexcept { return weight_in_range && all_factor_counts_positive; }
};

/// Reduces the least weight-t multiple's exponents I_1 > ... > I_{t-1}
/// modulo each factor's own exponent and records every congruent pair.
inline ConjectureReport check_conjecture(const ProductSpec& spec, int t,
                                         std::uint64_t max_degree = kDefaultMaxSearchDegree) {
  require_supported_weight(t);
  ConjectureReport rep;
  rep.product = spec;
  rep.weight = t;
  rep.product_weight = spec.product.weight();
  rep.weight_in_range = t >= 4 && t < rep.product_weight;
  rep.all_factor_counts_positive = true;
  for (const auto& f : spec.factors) {
    rep.factor_counts.push_back(count_tnomials(f.poly, f.exponent, t));
    if (rep.factor_counts.back() == 0) rep.all_factor_counts_positive = false;
  }
  rep.least_multiple = least_tnomial_multiple(spec, t, max_degree);
  const auto& exps = rep.least_multiple.exponents();
  for (std::size_t r = 0; r < spec.factors.size(); ++r) {
    const auto er = spec.factors[r].exponent;
    std::vector<std::uint64_t> row;
    for (auto i : exps) row.push_back(i % er);
    for (std::size_t v = 0; v < row.size(); ++v) {
      if (row[v] == 0) rep.zero_slots.push_back({r + 1, v + 1});
      for (std::size_t w = v + 1; w < row.size(); ++w)
        if (row[v] == row[w]) rep.collisions.push_back({r + 1, v + 1, w + 1, row[v]});
    }
    rep.residues.push_back(std::move(row));
  }
  if (!rep.applicable()) rep.verdict = Verdict::not_applicable;
  else rep.verdict = rep.collisions.empty() ? Verdict::conjecture_holds : Verdict::counterexample;
  return rep;
}

}  // namespace sparsemul
