#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sparsemul/crt_lift.hpp"

using namespace sparsemul;

namespace {

Gf2Poly P(const char* s) { return Gf2Poly::parse(s); }

std::vector<std::vector<std::uint64_t>> unpacked(const std::vector<PackedTnomial>& keys) {
  std::vector<std::vector<std::uint64_t>> out;
  for (auto k : keys) out.push_back(unpack_tnomial(k).exponents());
  std::sort(out.begin(), out.end());
  return out;
}

void check_cases(const Gf2Poly& a, std::uint64_t ea, const Gf2Poly& b, std::uint64_t eb) {
  const auto cases = enumerate_5nomials_by_cases(LiftSide::make(a, ea), LiftSide::make(b, eb));
  ASSERT_EQ(cases.tallies.size(), 9u);
  Count sum = 0;
  for (std::size_t c = 0; c < 9; ++c) {
    const auto& t = cases.tallies[c];
    EXPECT_EQ(t.label, kCase5Labels[c]);
    EXPECT_EQ(Count(t.distinct), t.closed_form) << t.label;
    EXPECT_EQ(t.distinct, cases.per_case[c].size());
    EXPECT_LE(t.distinct, t.accepted);
    EXPECT_LE(t.accepted, t.generated);
    sum += t.closed_form;
  }
  EXPECT_TRUE(cases.pairwise_disjoint());
  EXPECT_EQ(Count(cases.all.size()), sum);
  const auto m = a * b;
  const auto e = ea * eb;
  EXPECT_EQ(unpacked(cases.all), oracle::multiples(m.mask(), 5, e - 1));
  for (auto k : cases.all) ASSERT_TRUE((unpack_tnomial(k).to_poly() % m).is_zero());
}

}  // namespace

TEST(Crt, Examples) {
  EXPECT_EQ(crt_combine(1, 3, 1, 7), 1u);
  EXPECT_EQ(crt_combine(2, 3, 3, 7), 17u);
  EXPECT_EQ(crt_combine(0, 3, 0, 7), 0u);
  EXPECT_THROW(crt_combine(1, 3, 1, 15), HypothesisError);
  EXPECT_THROW(crt_combine(3, 3, 1, 7), HypothesisError);
  EXPECT_THROW(crt_combine(0, 0, 1, 7), HypothesisError);
}

TEST(Crt, RandomProperty) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 2000) {
    const auto e1 = rng() % 100000 + 1, e2 = rng() % 100000 + 1;
    if (std::gcd(e1, e2) != 1) continue;
    const auto r1 = rng() % e1, r2 = rng() % e2;
    const auto v = crt_combine(r1, e1, r2, e2);
    ASSERT_LT(v, e1 * e2);
    ASSERT_EQ(v % e1, r1);
    ASSERT_EQ(v % e2, r2);
    ++checked;
  }
}

TEST(LiftPair, AcceptsCompatiblePlan) {
  // left: x^2+x+(1+1) mod 3, right: x^2+x^3+x+x^2 mod 7
  const LiftPlan plan{3, 7, {2, 1, 0, 0}, {2, 3, 1, 2}};
  const auto r = lift_pair(plan);
  ASSERT_TRUE(std::holds_alternative<Tnomial>(r));
  const auto& t = std::get<Tnomial>(r);
  EXPECT_EQ(t.weight(), 5);
  EXPECT_TRUE((t.to_poly() % P("x^2+x+1")).is_zero());
  EXPECT_TRUE((t.to_poly() % P("x^3+x+1")).is_zero());
  EXPECT_EQ(t.exponents(), (std::vector<std::uint64_t>{15, 10, 9, 2}));
  EXPECT_TRUE(oracle::divides((P("x^2+x+1") * P("x^3+x+1")).mask(), t.exponents()));
}

TEST(LiftPair, Rejections) {
  const auto coll = lift_pair({3, 7, {1, 2, 1}, {4, 5, 4}});
  ASSERT_TRUE(std::holds_alternative<LiftRejection>(coll));
  EXPECT_EQ(std::get<LiftRejection>(coll).kind, LiftRejection::Kind::collision);
  EXPECT_EQ(std::get<LiftRejection>(coll).slot_a, 0u);
  EXPECT_EQ(std::get<LiftRejection>(coll).slot_b, 2u);

  const auto zero = lift_pair({3, 7, {1, 0}, {1, 0}});
  ASSERT_TRUE(std::holds_alternative<LiftRejection>(zero));
  EXPECT_EQ(std::get<LiftRejection>(zero).kind, LiftRejection::Kind::zero_exponent);
  EXPECT_EQ(std::get<LiftRejection>(zero).slot_a, 1u);
  EXPECT_FALSE(std::get<LiftRejection>(zero).describe().empty());

  EXPECT_THROW(lift_pair({3, 7, {1, 2}, {1}}), HypothesisError);
}

TEST(Packing, RoundTrip) {
  const std::vector<std::uint64_t> exps{65535, 300, 17, 1};
  const auto k = pack_tnomial(exps);
  EXPECT_EQ(unpack_tnomial(k).exponents(), exps);
}

TEST(Cases, SmallPairs) {
  check_cases(P("x^2+x+1"), 3, P("x^3+x+1"), 7);
  check_cases(P("x^3+x+1"), 7, P("x^4+x+1"), 15);
  check_cases(P("x^2+x+1"), 3, P("x^5+x^2+1"), 31);
  check_cases(P("x^3+x+1"), 7, P("x^5+x^2+1"), 31);
}

TEST(Cases, LargerPair) {
  const auto cases = enumerate_5nomials_by_cases(LiftSide::make(P("x^4+x+1"), 15), LiftSide::make(P("x^5+x^2+1"), 31));
  EXPECT_EQ(cases.all.size(), 3723685u);
  EXPECT_TRUE(cases.pairwise_disjoint());
  for (const auto& t : cases.tallies) EXPECT_EQ(Count(t.distinct), t.closed_form) << t.label;
}

// A reducible left side: the prefix (x^2+x+1)(x^3+x+1) folded with x^5+x^2+1.
TEST(Cases, PrefixTimesFactor) {
  const auto f12 = P("x^2+x+1") * P("x^3+x+1");
  const auto cases = enumerate_5nomials_by_cases(LiftSide::make(f12, 21), LiftSide::make(P("x^5+x^2+1"), 31));
  EXPECT_EQ(cases.all.size(), 7117650u);
  EXPECT_TRUE(cases.pairwise_disjoint());
  for (const auto& t : cases.tallies) EXPECT_EQ(Count(t.distinct), t.closed_form) << t.label;
  const auto m = f12 * P("x^5+x^2+1");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const auto k = cases.all[rng() % cases.all.size()];
    ASSERT_TRUE(oracle::divides(m.mask(), unpack_tnomial(k).exponents()));
  }
}

TEST(Cases, Errors) {
  EXPECT_THROW(enumerate_5nomials_by_cases(LiftSide::make(P("x^2+x+1"), 3), LiftSide::make(P("x^4+x+1"), 15)),
               HypothesisError);
  LiftSide bad = LiftSide::make(P("x^3+x+1"), 7);
  bad.exponent = 9;
  EXPECT_THROW(enumerate_5nomials_by_cases(LiftSide::make(P("x^2+x+1"), 3), bad), HypothesisError);
  const LiftSide big1{P("x^9+x^4+1"), 511, {}, {}, {}};
  const LiftSide big2{P("x^8+x^4+x^3+x^2+1"), 255, {}, {}, {}};
  EXPECT_THROW(enumerate_5nomials_by_cases(big1, big2), CapExceeded);
}
