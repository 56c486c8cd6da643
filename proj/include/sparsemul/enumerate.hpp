#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2poly.hpp"
#include "order.hpp"
#include "tables.hpp"
#include "tnomial.hpp"

namespace sparsemul {

/// Default ceiling on materialized enumeration results.
inline constexpr std::uint64_t kMaxEnumeratedResults = std::uint64_t{1} << 24;

inline void require_supported_weight(int t) {
  if (t < 3 || t > 5) throw HypothesisError("weight t must be 3, 4 or 5 (got " + std::to_string(t) + ")");
}

/// Calls visit(span of t-1 decreasing exponents) once for every weight-t
/// multiple of the table's modulus whose exponents lie in [1, max_exponent].
/// Each multiple is reached from its t-2 smallest exponents; the largest one
/// is the table lookup and must exceed them all.
template <class Visitor>
void for_each_tnomial(const ResidueTable& table, int t, std::uint64_t max_exponent, Visitor&& visit) {
  require_supported_weight(t);
  const std::uint64_t e = table.exponent();
  if (max_exponent >= e) max_exponent = e - 1;
  const auto& r = table.residues();
  constexpr auto kNone = ResidueTable::kNone;
  std::array<std::uint64_t, 4> out{};
  switch (t) {
    case 3:
      for (std::uint64_t i = 1; i <= max_exponent; ++i) {
        const auto j = table.index_of(r[i] ^ 1u);
        if (j != kNone && j > i && j <= max_exponent) {
          out[0] = j;
          out[1] = i;
          visit(std::span<const std::uint64_t>(out.data(), 2));
        }
      }
      break;
    case 4:
      for (std::uint64_t i = 1; i <= max_exponent; ++i) {
        const auto ri = r[i] ^ 1u;
        for (std::uint64_t j = i + 1; j <= max_exponent; ++j) {
          const auto k = table.index_of(ri ^ r[j]);
          if (k != kNone && k > j && k <= max_exponent) {
            out[0] = k;
            out[1] = j;
            out[2] = i;
            visit(std::span<const std::uint64_t>(out.data(), 3));
          }
        }
      }
      break;
    case 5:
      for (std::uint64_t i = 1; i <= max_exponent; ++i) {
        const auto ri = r[i] ^ 1u;
        for (std::uint64_t j = i + 1; j <= max_exponent; ++j) {
          const auto rij = ri ^ r[j];
          for (std::uint64_t k = j + 1; k <= max_exponent; ++k) {
            const auto l = table.index_of(rij ^ r[k]);
            if (l != kNone && l > k && l <= max_exponent) {
              out[0] = l;
              out[1] = k;
              out[2] = j;
              out[3] = i;
              visit(std::span<const std::uint64_t>(out.data(), 4));
            }
          }
        }
      }
      break;
  }
}

inline std::uint64_t count_tnomials(const ResidueTable& table, int t) {
  std::uint64_t n = 0;
  for_each_tnomial(table, t, table.exponent() - 1, [&](std::span<const std::uint64_t>) { ++n; });
  return n;
}

inline std::uint64_t count_tnomials(const Gf2Poly& poly, std::uint64_t e, int t) {
  return count_tnomials(build_residue_table(poly, e), t);
}

/// Trinomial count by residue matching; valid for any poly with poly(0) = 1.
inline std::uint64_t count_trinomials_by_residues(const Gf2Poly& poly, std::uint64_t e) {
  return count_tnomials(build_residue_table(poly, e), 3);
}

/// Trinomial count by pairing i with its Zech logarithm; poly must be primitive.
inline std::uint64_t count_trinomials_by_zech(const Gf2Poly& poly) {
  const ZechTable z = build_zech(FactorSpec::make(poly));
  std::uint64_t pairs = 0;
  for (std::uint64_t i = 1; i < z.exponent(); ++i)
    if (z.zech(i) > i) ++pairs;
  return pairs;
}

/// Number of trinomials x^a + x^b + 1, 0 < b < a < e, divisible by poly.
inline std::uint64_t count_trinomials(const Gf2Poly& poly, std::uint64_t e) {
  if (poly.degree() < 1 || !poly.constant_term()) throw HypothesisError("count_trinomials needs poly(0) = 1");
  const auto actual = order(poly);
  if (actual != e)
    throw HypothesisError("count_trinomials: given exponent " + std::to_string(e) + " but ord(" + poly.to_string() +
                          ") = " + std::to_string(actual));
  if (poly.degree() <= kMaxDenseIndexDegree && is_primitive(poly)) return count_trinomials_by_zech(poly);
  return count_trinomials_by_residues(poly, e);
}

/// All weight-t multiples of degree < e (or with every exponent <= degree_cap),
/// sorted lexicographically by their decreasing exponent lists.
inline std::vector<Tnomial> enumerate_tnomials(const Gf2Poly& poly, std::uint64_t e, int t,
                                               std::optional<std::uint64_t> degree_cap = std::nullopt,
                                               std::uint64_t max_results = kMaxEnumeratedResults) {
  require_supported_weight(t);
  if (degree_cap && *degree_cap >= e)
    throw HypothesisError("degree_cap " + std::to_string(*degree_cap) + " must be below the exponent " +
                          std::to_string(e));
  const ResidueTable table = build_residue_table(poly, e);
  std::vector<Tnomial> out;
  for_each_tnomial(table, t, degree_cap.value_or(e - 1), [&](std::span<const std::uint64_t> exps) {
    if (out.size() >= max_results)
      throw CapExceeded("enumerate_tnomials: more than " + std::to_string(max_results) + " results");
    out.emplace_back(std::vector<std::uint64_t>(exps.begin(), exps.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum of the degrees of all weight-t multiples of degree < e.
inline std::uint64_t degree_sum(const Gf2Poly& poly, std::uint64_t e, int t) {
  const ResidueTable table = build_residue_table(poly, e);
  std::uint64_t sum = 0;
  for_each_tnomial(table, t, e - 1, [&](std::span<const std::uint64_t> exps) { sum += exps[0]; });
  return sum;
}

/// Closed form (e/3 - 1) * N3 for the number of shifted trinomial multiples.
inline std::uint64_t shift_set_size(std::uint64_t e, std::uint64_t n3) {
  const auto total = nt::checked_mul(e, n3);
  if (total % 3 != 0) throw HypothesisError("shift_set_size: e * N3 is not divisible by 3");
  return total / 3 - n3;
}

/// Shifts x^lambda * h(x) of every trinomial multiple h of degree d_h, with
/// 1 <= lambda <= e - 1 - d_h. Elements are exponent triples
/// (lambda + d_h, lambda + b, lambda).
struct ShiftSet {
  Gf2Poly base;
  std::uint64_t exponent = 0;
  std::vector<std::array<std::uint64_t, 3>> elements;
  std::uint64_t cardinality = 0;
};

inline ShiftSet build_shift_set(const Gf2Poly& poly, std::uint64_t e) {
  ShiftSet s{poly, e, {}, 0};
  for (const auto& h : enumerate_tnomials(poly, e, 3)) {
    const auto d = h.exponents()[0];
    const auto b = h.exponents()[1];
    for (std::uint64_t lambda = 1; lambda + d <= e - 1; ++lambda) s.elements.push_back({lambda + d, lambda + b, lambda});
  }
  std::sort(s.elements.begin(), s.elements.end());
  s.cardinality = s.elements.size();
  return s;
}

}  // namespace sparsemul
