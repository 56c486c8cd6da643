#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sparsemul/formulas.hpp"

using namespace sparsemul;

namespace {

Gf2Poly P(const char* s) { return Gf2Poly::parse(s); }

ProductSpec degrees(std::initializer_list<int> ds) {
  const std::vector<int> v(ds);
  return ProductSpec::from_degrees(v);
}

Count lb(std::initializer_list<Count> cs, int t) {
  const std::vector<Count> v(cs);
  return lower_bound_t(v, t);
}

}  // namespace

TEST(LowerBound, Examples) {
  EXPECT_EQ(lb({1, 3}, 3), 6);
  EXPECT_EQ(lb({0, 0}, 5), 0);
  EXPECT_EQ(lb({840}, 5), 840);
  EXPECT_EQ(lb({2, 3, 5}, 4), 2 * 3 * 5 * 6 * 6);
  EXPECT_THROW(lb({}, 3), HypothesisError);
}

TEST(Count3, ProductFormulaAgainstBruteForce) {
  const std::vector<Count> two{1, 3}, three{1, 3, 15};
  EXPECT_EQ(count3_product(two), 6);
  EXPECT_EQ(count3_product(three), 180);
  const auto prod = P("x^2+x+1") * P("x^3+x+1") * P("x^5+x^2+1");
  EXPECT_EQ(oracle::count_multiples(prod.mask(), 3, 650), 180u);
}

TEST(Count4, Examples) {
  EXPECT_EQ(count4_pair(3, 7, 0, 0), 12);
  const auto n24 = oracle::count_multiples(P("x^3+x+1").mask(), 4, 6);
  const auto pair = (P("x^2+x+1") * P("x^3+x+1")).mask();
  EXPECT_EQ(count4_pair(3, 7, 0, n24), oracle::count_multiples(pair, 4, 20));
  EXPECT_EQ(count4_pair(3, 7, 0, n24), 40);
  const auto n14 = oracle::count_multiples(P("x^3+x+1").mask(), 4, 6);
  const auto n24b = oracle::count_multiples(P("x^4+x+1").mask(), 4, 14);
  const auto big = (P("x^3+x+1") * P("x^4+x+1")).mask();
  EXPECT_EQ(count4_pair(7, 15, n14, n24b), oracle::count_multiples(big, 4, 104));
  EXPECT_THROW(count4_pair(3, 15, 0, 28), HypothesisError);
}

TEST(Count5, Examples) {
  EXPECT_EQ(count5_pair(3, 7, 1, 3, 0, 0, 0, 4), 155);
  EXPECT_EQ(count5_pair(21, 31, 6, 15, 155, 840, 36, 140), 7117650);
  EXPECT_EQ(count5_pair(3, 7, 0, 0, 0, 0, 0, 0), 0);
  EXPECT_THROW(count5_pair(3, 15, 1, 7, 0, 56, 0, 28), HypothesisError);
  EXPECT_THROW(count5_pair(3, 7, 1, 3, 0, 0, 0, 5), HypothesisError);
}

TEST(Count5, TermsSumAndLabels) {
  const auto terms = count5_pair_terms({21, 31, 6, 15, 155, 840, 36, 140});
  Count sum = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    EXPECT_EQ(terms[i].label, kCase5Labels[i]);
    EXPECT_GE(terms[i].value, 0);
    sum += terms[i].value;
  }
  EXPECT_EQ(sum, 7117650);
}

TEST(Recursion, Examples) {
  const auto r5 = count_product_recursive(degrees({2, 3, 5}), 5);
  EXPECT_EQ(r5.exact, 7117650);
  EXPECT_EQ(r5.lower_bound, 0);
  EXPECT_EQ(r5.route, Route::recursion);
  ASSERT_EQ(r5.prefixes.size(), 3u);
  EXPECT_EQ(r5.prefixes[1].label, "f1f2");
  EXPECT_EQ(r5.prefixes[1].nt, 155);
  EXPECT_EQ(r5.prefixes[1].n3, 6);
  EXPECT_EQ(r5.prefixes[1].shifts, 36);
  EXPECT_EQ(r5.prefixes[1].exponent, 21);
  EXPECT_EQ(r5.factors[2].nt, 840);
  EXPECT_EQ(r5.factors[2].shifts, 140);

  EXPECT_EQ(count_product_recursive(degrees({2, 3}), 3).exact, 6);
  EXPECT_EQ(count_product_recursive(degrees({2, 3}), 3).route, Route::closed_form_pair);
  EXPECT_EQ(count_product_recursive(degrees({5}), 5).exact, 840);
  EXPECT_EQ(count_product_recursive(degrees({2}), 5).exact, 0);
  EXPECT_THROW(count_product_recursive(degrees({2, 3}), 6), HypothesisError);
}

TEST(Recursion, BeyondSixtyFourBits) {
  const auto r = count_product_recursive(degrees({2, 3, 5, 7, 11}), 5);
  EXPECT_GT(r.exact, Count(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_GE(r.exact, r.lower_bound);
}

TEST(Recursion, LowerBoundHolds) {
  for (int t : {3, 4, 5}) {
    const auto r = count_product_recursive(degrees({2, 3, 5, 7}), t);
    EXPECT_GE(r.exact, r.lower_bound) << t;
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_count_product(degrees({2, 3}), 5), 155u);
  EXPECT_EQ(oracle_count_product(degrees({2, 3}), 4), count4_pair(3, 7, 0, count_tnomials(P("x^3+x+1"), 7, 4)));
  EXPECT_EQ(oracle_count_product(degrees({2, 3, 5}), 5), 7117650u);
  EXPECT_THROW(oracle_count_product(degrees({2, 3, 5, 7}), 4), CapExceeded);
  try {
    oracle_count_product(degrees({5, 7}), 4, 100);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("recursion"), std::string::npos);
  }
}

// Closed forms against an independent subset scan of the product polynomial.
TEST(Oracle, PairFormulasMatchBruteForce) {
  const std::vector<std::pair<int, int>> pairs{{2, 3}, {3, 4}, {2, 5}, {3, 5}, {4, 5}, {2, 7}, {3, 7}};
  for (const auto& [a, b] : pairs) {
    const auto spec = degrees({a, b});
    for (int t : {3, 4, 5}) {
      const auto formula = count_product_recursive(spec, t).exact;
      const auto lib = oracle_count_product(spec, t, 4096);
      EXPECT_EQ(formula, lib) << a << "," << b << " t=" << t;
      if (spec.exponent <= 255 || t < 5) {
        EXPECT_EQ(Count(oracle::count_multiples(spec.product.mask(), t, spec.exponent - 1)), formula)
            << a << "," << b << " t=" << t;
      }
    }
  }
}

TEST(Oracle, KnownPairCounts) {
  EXPECT_EQ(count_product_recursive(degrees({2, 3}), 4).exact, 40);
  EXPECT_EQ(count_product_recursive(degrees({2, 3}), 5).exact, 155);
  EXPECT_EQ(count_product_recursive(degrees({3, 4}), 4).exact, 1460);
  EXPECT_EQ(count_product_recursive(degrees({3, 4}), 5).exact, 35945);
  EXPECT_EQ(count_product_recursive(degrees({3, 5}), 5).exact, 344625);
  EXPECT_EQ(count_product_recursive(degrees({4, 5}), 5).exact, 3723685);
  EXPECT_EQ(count_product_recursive(degrees({2, 7}), 5).exact, 1653855);
}

TEST(ProductSpecTest, Validation) {
  EXPECT_THROW(ProductSpec::make({P("x^2+x+1"), P("x^4+x+1")}), HypothesisError);  // 3 | 15
  EXPECT_THROW(ProductSpec::make({P("x^4+x^3+x^2+x+1")}), HypothesisError);
  EXPECT_THROW(ProductSpec::make(std::span<const Gf2Poly>{}), HypothesisError);
  const auto s = ProductSpec::make({P("x^2+x+1"), P("x^3+x+1"), P("x^5+x^2+1")});
  EXPECT_EQ(s.exponent, 651u);
  EXPECT_EQ(s.total_degree(), 10);
  EXPECT_EQ(s.product.degree(), 10);
}

TEST(Recursion, FoldOrderInvariance) {
  const auto a = count_product_recursive(degrees({2, 3, 5}), 5).exact;
  EXPECT_EQ(count_product_recursive(degrees({5, 3, 2}), 5).exact, a);
  EXPECT_EQ(count_product_recursive(degrees({3, 2, 5}), 5).exact, a);
  const auto b = count_product_recursive(degrees({3, 4, 5}), 4).exact;
  EXPECT_EQ(count_product_recursive(degrees({5, 4, 3}), 4).exact, b);
}
