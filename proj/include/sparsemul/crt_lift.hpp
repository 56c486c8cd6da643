#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "formulas.hpp"
#include "gf2poly.hpp"
#include "number_theory.hpp"
#include "order.hpp"
#include "tnomial.hpp"

namespace sparsemul {

/// Unique I in [0, e1*e2) with I = r1 mod e1 and I = r2 mod e2.
inline std::uint64_t crt_combine(std::uint64_t r1, std::uint64_t e1, std::uint64_t r2, std::uint64_t e2) {
  if (e1 == 0 || e2 == 0 || std::gcd(e1, e2) != 1)
    throw HypothesisError("crt_combine: moduli " + std::to_string(e1) + " and " + std::to_string(e2) +
                          " are not coprime");
  if (r1 >= e1 || r2 >= e2) throw HypothesisError("crt_combine: residue out of range");
  const auto m = nt::checked_mul(e1, e2);
  const auto inv = nt::inverse_mod(e1 % e2, e2);
  const auto step = nt::mul_mod((r2 + e2 - r1 % e2) % e2, inv, e2);
  return (r1 + nt::mul_mod(e1, step, m)) % m;
}

/// Slot-by-slot pairing of exponent residues mod e1 (left) and mod e2
/// (right). Padding terms x^k + x^k appear as a repeated residue.
struct LiftPlan {
  std::uint64_t e1 = 0;
  std::uint64_t e2 = 0;
  std::vector<std::uint64_t> left;
  std::vector<std::uint64_t> right;
};

struct LiftRejection {
  enum class Kind { zero_exponent, collision };
  Kind kind;
  std::size_t slot_a;
  std::size_t slot_b;  // equals slot_a for zero_exponent

  [[nodiscard]] std::string describe() const {
    if (kind == Kind::zero_exponent) return "slot " + std::to_string(slot_a) + " lifts to exponent 0";
    return "slots " + std::to_string(slot_a) + " and " + std::to_string(slot_b) + " lift to the same exponent";
  }
};

using LiftResult = std::variant<Tnomial, LiftRejection>;

/// Lifts every slot pair by CRT. A zero exponent would cancel the constant
/// term and equal exponents cancel each other, so both are rejections.
inline LiftResult lift_pair(const LiftPlan& plan) {
  if (plan.left.size() != plan.right.size())
    throw HypothesisError("lift_pair: " + std::to_string(plan.left.size()) + " left slots vs " +
                          std::to_string(plan.right.size()) + " right slots");
  std::vector<std::uint64_t> lifted;
  for (std::size_t s = 0; s < plan.left.size(); ++s) {
    const auto v = crt_combine(plan.left[s], plan.e1, plan.right[s], plan.e2);
    if (v == 0) return LiftRejection{LiftRejection::Kind::zero_exponent, s, s};
    for (std::size_t prev = 0; prev < lifted.size(); ++prev)
      if (lifted[prev] == v) return LiftRejection{LiftRejection::Kind::collision, prev, s};
    lifted.push_back(v);
  }
  return Tnomial(std::move(lifted));
}

/// Four exponents below 2^16 packed, largest in the top 16 bits.
using PackedTnomial = std::uint64_t;

inline PackedTnomial pack_tnomial(std::span<const std::uint64_t> decreasing) {
  PackedTnomial k = 0;
  for (auto e : decreasing) k = (k << 16) | e;
  return k;
}

inline Tnomial unpack_tnomial(PackedTnomial key, int slots = 4) {
  std::vector<std::uint64_t> exps(static_cast<std::size_t>(slots));
  for (int i = slots - 1; i >= 0; --i) {
    exps[static_cast<std::size_t>(i)] = key & 0xFFFF;
    key >>= 16;
  }
  return Tnomial(std::move(exps));
}

/// Everything the case generator needs about one side of the product.
struct LiftSide {
  Gf2Poly poly;
  std::uint64_t exponent = 0;
  std::vector<Tnomial> trinomials;
  std::vector<Tnomial> fivenomials;
  ShiftSet shifts;

  static LiftSide make(const Gf2Poly& poly, std::uint64_t e) {
    return {poly, e, enumerate_tnomials(poly, e, 3), enumerate_tnomials(poly, e, 5), build_shift_set(poly, e)};
  }
};

struct CaseTally {
  std::string_view label;
  std::uint64_t generated = 0;  // slot arrangements tried
  std::uint64_t accepted = 0;   // arrangements lifting to a 5-nomial
  std::uint64_t distinct = 0;   // distinct 5-nomials after canonicalization
  Count closed_form;
};

struct CaseEnumeration {
  std::vector<CaseTally> tallies;
  std::vector<std::vector<PackedTnomial>> per_case;  // sorted, unique
  std::vector<PackedTnomial> all;                    // sorted union

  [[nodiscard]] bool pairwise_disjoint() const {
    std::uint64_t sum = 0;
    for (const auto& t : tallies) sum += t.distinct;
    return sum == all.size();
  }
};

namespace detail {

using Slots = std::array<std::uint64_t, 4>;

inline std::vector<Slots> five_slots(const LiftSide& s) {
  std::vector<Slots> out;
  for (const auto& p : s.fivenomials) {
    const auto& e = p.exponents();
    out.push_back({e[0], e[1], e[2], e[3]});
  }
  return out;
}

inline std::vector<Slots> padded_slots(const LiftSide& s) {
  std::vector<Slots> out;
  for (const auto& p : s.trinomials)
    for (std::uint64_t k = 0; k < s.exponent; ++k) out.push_back({p.exponents()[0], p.exponents()[1], k, k});
  return out;
}

inline std::vector<Slots> shifted_slots(const LiftSide& s) {
  std::vector<Slots> out;
  for (const auto& a : s.shifts.elements) out.push_back({a[0], a[1], a[2], 0});
  return out;
}

// Left slots stay in order; every distinct arrangement of each right
// multiset is lifted. Duplicates from repeated left residues are removed
// afterwards by sorting the packed keys.
inline std::vector<PackedTnomial> run_case(const std::vector<Slots>& lefts, std::vector<Slots> rights,
                                           std::uint64_t e1, std::uint64_t e2, CaseTally& tally) {
  const auto m = e1 * e2;
  const auto inv = nt::inverse_mod(e1 % e2, e2);
  auto lift = [&](std::uint64_t r1, std::uint64_t r2) {
    const auto step = ((r2 + e2 - r1 % e2) % e2) * inv % e2;
    return (r1 + e1 * step) % m;
  };
  for (auto& r : rights) std::sort(r.begin(), r.end());
  std::vector<PackedTnomial> keys;
  for (const auto& left : lefts) {
    for (const auto& right : rights) {
      Slots perm = right;
      do {
        ++tally.generated;
        Slots lifted{};
        bool ok = true;
        for (std::size_t s = 0; s < 4 && ok; ++s) {
          lifted[s] = lift(left[s], perm[s]);
          if (lifted[s] == 0) ok = false;
          for (std::size_t p = 0; p < s && ok; ++p)
            if (lifted[p] == lifted[s]) ok = false;
        }
        if (!ok) continue;
        ++tally.accepted;
        std::sort(lifted.begin(), lifted.end(), std::greater<>());
        keys.push_back(pack_tnomial(lifted));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  tally.distinct = keys.size();
  return keys;
}

}  // namespace detail

/// Largest product exponent the packed case generator accepts.
inline constexpr std::uint64_t kMaxCaseExponent = std::uint64_t{1} << 16;

/// Builds every 5-nomial multiple of f1 * f2 (degree < e1 e2) from pairs of
/// multiples of the two factors: 5-nomials, trinomials padded with x^k + x^k,
/// and shifted trinomials padded with 1 + 1. Each of the nine shape pairs is
/// generated independently and tallied against its closed-form summand.
inline CaseEnumeration enumerate_5nomials_by_cases(const LiftSide& f1, const LiftSide& f2) {
  for (const auto* s : {&f1, &f2}) {
    if (s->poly.degree() < 1 || !s->poly.constant_term())
      throw HypothesisError("case generator: " + s->poly.to_string() + " must have constant term 1");
    if (order(s->poly) != s->exponent)
      throw HypothesisError("case generator: " + std::to_string(s->exponent) + " is not the order of " +
                            s->poly.to_string());
  }
  if (std::gcd(f1.exponent, f2.exponent) != 1) throw HypothesisError("case generator: exponents are not coprime");
  if (!gcd(f1.poly, f2.poly).is_one()) throw HypothesisError("case generator: factors share a common factor");
  if (nt::checked_mul(f1.exponent, f2.exponent) > kMaxCaseExponent)
    throw CapExceeded("case generator: product exponent exceeds 2^16");

  const auto five1 = detail::five_slots(f1), five2 = detail::five_slots(f2);
  const auto pad1 = detail::padded_slots(f1), pad2 = detail::padded_slots(f2);
  const auto shf1 = detail::shifted_slots(f1), shf2 = detail::shifted_slots(f2);
  const std::array<std::pair<const std::vector<detail::Slots>*, const std::vector<detail::Slots>*>, 9> shapes{{
      {&five1, &five2},
      {&pad1, &five2},
      {&five1, &pad2},
      {&shf1, &five2},
      {&five1, &shf2},
      {&shf1, &shf2},
      {&shf1, &pad2},
      {&pad1, &shf2},
      {&pad1, &pad2},
  }};

  const auto terms = count5_pair_terms(PairCounts5{
      f1.exponent, f2.exponent, f1.trinomials.size(), f2.trinomials.size(), f1.fivenomials.size(),
      f2.fivenomials.size(), f1.shifts.cardinality, f2.shifts.cardinality});

  CaseEnumeration out;
  out.tallies.resize(shapes.size());
  std::vector<std::future<std::vector<PackedTnomial>>> jobs;
  for (std::size_t c = 0; c < shapes.size(); ++c) {
    out.tallies[c].label = terms[c].label;
    out.tallies[c].closed_form = terms[c].value;
    jobs.push_back(std::async(std::launch::async, [&, c] {
      return detail::run_case(*shapes[c].first, *shapes[c].second, f1.exponent, f2.exponent, out.tallies[c]);
    }));
  }
  for (auto& job : jobs) out.per_case.push_back(job.get());

  for (const auto& keys : out.per_case) {
    std::vector<PackedTnomial> merged;
    merged.reserve(out.all.size() + keys.size());
    std::merge(out.all.begin(), out.all.end(), keys.begin(), keys.end(), std::back_inserter(merged));
    out.all = std::move(merged);
  }
  out.all.erase(std::unique(out.all.begin(), out.all.end()), out.all.end());
  return out;
}

}  // namespace sparsemul
