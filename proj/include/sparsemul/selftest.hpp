#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "crt_lift.hpp"
#include "degree_analysis.hpp"
#include "enumerate.hpp"
#include "formulas.hpp"
#include "order.hpp"

namespace sparsemul::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Collects failed expectations for one criterion.
class Checker {
public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream os;
    os << what << ": got " << actual << ", expected " << expected;
    fail(os.str());
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  void fail(std::string msg) {
    r_.passed = false;
    r_.failures.push_back(std::move(msg));
  }

private:
  CriterionResult& r_;
};

namespace detail {

inline std::string degrees_label(const std::vector<int>& ds) {
  std::string s = "(";
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + std::to_string(ds[i]);
  return s + ")";
}

inline ProductSpec spec_of(std::initializer_list<int> degrees) {
  const std::vector<int> ds(degrees);
  return ProductSpec::from_degrees(ds);
}

inline ProductSpec spec_of(std::initializer_list<const char*> polys) {
  std::vector<Gf2Poly> ps;
  for (const char* p : polys) ps.push_back(Gf2Poly::parse(p));
  return ProductSpec::make(ps);
}

// Instances with product exponent <= 651 used by the property suites.
inline const std::vector<std::vector<int>>& small_products() {
  static const std::vector<std::vector<int>> v{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}, {4, 5}, {2, 3, 5}};
  return v;
}

inline std::vector<PackedTnomial> direct_5nomial_keys(const Gf2Poly& product, std::uint64_t e) {
  std::vector<PackedTnomial> keys;
  for_each_tnomial(build_residue_table(product, e), 5, e - 1,
                   [&](std::span<const std::uint64_t> exps) { keys.push_back(pack_tnomial(exps)); });
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

inline void reproduce_illustrative_example(Checker& c) {
  const auto spec = detail::spec_of({2, 3, 5});
  const auto rep3 = count_product_recursive(spec, 3);
  const auto rep5 = count_product_recursive(spec, 5);
  const std::uint64_t e[] = {3, 7, 31}, n3[] = {1, 3, 15}, n5[] = {0, 0, 840}, sh[] = {0, 4, 140};
  for (std::size_t r = 0; r < 3; ++r) {
    const auto tag = "factor " + std::to_string(r + 1) + " ";
    c.equal(rep5.factors[r].exponent, Count(e[r]), tag + "e");
    c.equal(rep5.factors[r].n3, Count(n3[r]), tag + "N3");
    c.equal(rep5.factors[r].nt, Count(n5[r]), tag + "N5");
    c.equal(rep5.factors[r].shifts, Count(sh[r]), tag + "n");
  }
  c.equal(rep3.prefixes[1].nt, Count(6), "N12,3");
  c.equal(rep5.prefixes[1].n3, Count(6), "N12,3 (t=5 run)");
  c.equal(rep5.prefixes[1].shifts, Count(36), "n12");
  c.equal(rep5.prefixes[1].nt, Count(155), "N12,5");
  c.equal(rep5.exact, Count(7117650), "N123,5");
}

inline void formula_oracle_equivalence(Checker& c) {
  for (const auto& ds : std::vector<std::vector<int>>{{2, 3}, {3, 4}, {3, 5}, {4, 5}}) {
    const auto spec = ProductSpec::from_degrees(ds);
    for (int t : {4, 5}) {
      const auto formula = count_product_recursive(spec, t).exact;
      const auto oracle = oracle_count_product(spec, t);
      c.equal(formula, Count(oracle), detail::degrees_label(ds) + " t=" + std::to_string(t) + " formula vs oracle");
    }
  }
  const auto spec = detail::spec_of({2, 3, 5});
  c.equal(count_product_recursive(spec, 5).exact, Count(oracle_count_product(spec, 5)), "(2,3,5) t=5 recursion vs oracle");
}

inline void case_partition(Checker& c) {
  for (const auto& ds : std::vector<std::vector<int>>{{2, 3}, {3, 5}}) {
    const auto spec = ProductSpec::from_degrees(ds);
    const auto& f1 = spec.factors[0];
    const auto& f2 = spec.factors[1];
    const auto cases = enumerate_5nomials_by_cases(LiftSide::make(f1.poly, f1.exponent),
                                                   LiftSide::make(f2.poly, f2.exponent));
    const auto label = detail::degrees_label(ds);
    for (const auto& t : cases.tallies)
      c.equal(Count(t.distinct), t.closed_form, label + " case '" + std::string(t.label) + "'");
    c.expect(cases.pairwise_disjoint(), label + " cases overlap");
    c.expect(cases.all == detail::direct_5nomial_keys(spec.product, spec.exponent),
             label + " union differs from direct enumeration");
  }
}

inline void timed_least(Checker& c, const ProductSpec& spec, int t, std::uint64_t expected_degree,
                        const std::string& expected_text, const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  const auto m = least_tnomial_multiple(spec, t);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.equal(m.degree(), expected_degree, label + " degree");
  if (!expected_text.empty()) c.equal(m.to_string(), expected_text, label + " multiple");
  c.expect(m.to_poly() % spec.product == Gf2Poly(), label + " result is not a multiple");
  c.expect(secs < 120.0, label + " took longer than 120 s");
}

inline void least_degree_regressions(Checker& c) {
  timed_least(c, detail::spec_of({"x^5+x^2+1", "x^3+x+1"}), 4, 13, "", "(x^5+x^2+1)(x^3+x+1) t=4");
  timed_least(c, detail::spec_of({"x^5+x^4+x^3+x^2+1", "x^7+x+1"}), 5, 22, "", "(x^5+x^4+x^3+x^2+1)(x^7+x+1) t=5");
  timed_least(c, detail::spec_of({"x^4+x+1", "x^9+x^6+x^4+x^3+1"}), 5, 19, "x^19+x^17+x^8+x^4+1", "pair t=5");
  timed_least(c, detail::spec_of({"x^4+x+1", "x^5+x^4+x^3+x^2+1", "x^9+x^8+x^6+x^5+1"}), 4, 135,
              "x^135+x^92+x^47+1", "triple t=4");
}

inline void conjecture_counterexamples(Checker& c) {
  {
    const auto rep = check_conjecture(detail::spec_of({"x^4+x+1", "x^9+x^6+x^4+x^3+1"}), 5);
    c.expect(rep.applicable(), "pair: hypotheses not satisfied");
    c.expect(rep.verdict == Verdict::counterexample, "pair: verdict is not counterexample");
    const ResidueCollision want{1, 1, 4, 4};
    c.expect(rep.collisions == std::vector<ResidueCollision>{want}, "pair: expected exactly I1 = I4 = 4 mod 15");
  }
  {
    const auto rep =
        check_conjecture(detail::spec_of({"x^4+x+1", "x^5+x^4+x^3+x^2+1", "x^9+x^8+x^6+x^5+1"}), 4);
    c.expect(rep.applicable(), "triple: hypotheses not satisfied");
    c.expect(rep.verdict == Verdict::counterexample, "triple: verdict is not counterexample");
    const ResidueCollision want{1, 2, 3, 2};
    c.expect(rep.collisions == std::vector<ResidueCollision>{want}, "triple: expected exactly I2 = I3 = 2 mod 15");
  }
}

inline void property_suites(Checker& c) {
  // Degree-sum identity and shift-set size on every primitive polynomial of degree <= 7.
  for (int d = 2; d <= 7; ++d) {
    for (const auto& f : primitive_polynomials(d)) {
      const std::uint64_t e = (std::uint64_t{1} << d) - 1;
      for (int t : {3, 4, 5}) {
        const auto n = count_tnomials(f, e, t);
        c.equal(degree_sum(f, e, t) * static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(t - 1) * e * n,
                f.to_string() + " degree-sum t=" + std::to_string(t));
      }
      c.equal(build_shift_set(f, e).cardinality, shift_set_size(e, count_trinomials(f, e)),
              f.to_string() + " shift-set size");
    }
  }
  for (const auto& ds : detail::small_products()) {
    const auto spec = ProductSpec::from_degrees(ds);
    const auto label = detail::degrees_label(ds);
    for (int t : {3, 4, 5}) {
      const auto n = count_tnomials(spec.product, spec.exponent, t);
      c.equal(degree_sum(spec.product, spec.exponent, t) * static_cast<std::uint64_t>(t),
              static_cast<std::uint64_t>(t - 1) * spec.exponent * n, label + " degree-sum t=" + std::to_string(t));
    }
    c.equal(build_shift_set(spec.product, spec.exponent).cardinality,
            shift_set_size(spec.exponent, count_trinomials(spec.product, spec.exponent)), label + " shift-set size");
  }

  // Trinomial count 2^(d-1) - 1 for every primitive polynomial of degree 2..9.
  for (int d = 2; d <= 9; ++d) {
    const std::uint64_t e = (std::uint64_t{1} << d) - 1;
    for (const auto& f : primitive_polynomials(d))
      c.equal(count_trinomials(f, e), (std::uint64_t{1} << (d - 1)) - 1, f.to_string() + " N3");
  }

  // Counts do not depend on which primitive polynomials are chosen (d <= 5).
  for (int d = 2; d <= 5; ++d) {
    const auto all = primitive_polynomials(d);
    const std::uint64_t e = (std::uint64_t{1} << d) - 1;
    for (int t : {3, 4, 5}) {
      const auto ref = count_tnomials(all.front(), e, t);
      for (const auto& f : all) c.equal(count_tnomials(f, e, t), ref, f.to_string() + " N" + std::to_string(t));
    }
  }
  for (const auto& ds : std::vector<std::vector<int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
    const auto choices1 = primitive_polynomials(ds[0]);
    const auto choices2 = primitive_polynomials(ds[1]);
    for (int t : {4, 5}) {
      const auto expected = count_product_recursive(ProductSpec::from_degrees(ds), t).exact;
      for (const auto& a : choices1)
        for (const auto& b : choices2)
          c.equal(Count(oracle_count_product(ProductSpec::make({a, b}), t)), expected,
                  "(" + a.to_string() + ")(" + b.to_string() + ") t=" + std::to_string(t));
    }
  }

  // Lower bound never exceeds the exact count and is tight for trinomials.
  for (const auto& ds : detail::small_products()) {
    const auto spec = ProductSpec::from_degrees(ds);
    for (int t : {3, 4, 5}) {
      const auto rep = count_product_recursive(spec, t);
      const auto label = detail::degrees_label(ds) + " t=" + std::to_string(t);
      c.expect(rep.lower_bound <= rep.exact, label + " lower bound above exact count");
      if (t == 3) c.equal(rep.lower_bound, rep.exact, label + " lower bound not tight");
    }
  }

  // Fold order does not matter.
  std::vector<int> order{2, 3, 5};
  for (int t : {3, 4, 5}) {
    const auto ref = count_product_recursive(ProductSpec::from_degrees(order), t).exact;
    std::vector<int> perm = order;
    do {
      c.equal(count_product_recursive(ProductSpec::from_degrees(perm), t).exact, ref,
              detail::degrees_label(perm) + " t=" + std::to_string(t) + " fold order");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

inline void estimator_checks(Checker& c) {
  const auto crude = estimate_least_degree(1, 217, 8, 4).crude_c;
  c.expect(std::abs(crude - 6.3496) <= 1e-3, "crude_c for d=8, t=4 is " + std::to_string(crude));
  const auto spec = detail::spec_of({"x^5+x^4+x^3+x^2+1", "x^7+x+1"});
  const auto n = count_product_recursive(spec, 5).exact;
  const auto est = estimate_least_degree(n, spec.exponent, spec.total_degree(), 5);
  c.expect(est.refined_c >= 19 && est.refined_c <= 21, "refined_c = " + std::to_string(est.refined_c));
  const auto k = binomial(est.refined_c, 4) * n >= binomial(spec.exponent - 1, 4) &&
                 binomial(est.refined_c - 1, 4) * n < binomial(spec.exponent - 1, 4);
  c.expect(k, "refined_c does not bracket the binomial inequality");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  void (*run)(Checker&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "illustrative example (2,3,5) regression", 1.0, reproduce_illustrative_example},
      {2, "formula-oracle equivalence", 300.0, formula_oracle_equivalence},
      {3, "six-case CRT partition", 0.0, case_partition},
      {4, "least-degree regressions", 0.0, least_degree_regressions},
      {5, "conjecture counterexamples", 0.0, conjecture_counterexamples},
      {6, "property suites", 0.0, property_suites},
      {7, "least-degree estimator", 0.0, estimator_checks},
  };
  return all;
}

/// Runs every criterion, printing one PASS/FAIL line each (failure details
/// indented below). A criterion with a budget also fails when it overruns.
inline std::vector<CriterionResult> run_all(std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const auto& crit : criteria()) {
    CriterionResult r;
    r.id = crit.id;
    r.name = crit.name;
    r.budget_seconds = crit.budget_seconds;
    Checker check(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& ex) {
      check.fail(std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds)
      check.fail("runtime " + std::to_string(r.seconds) + " s exceeds budget " + std::to_string(r.budget_seconds) + " s");
    out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " (" << std::fixed;
    out.precision(2);
    out << r.seconds << " s)\n";
    for (const auto& f : r.failures) out << "      " << f << '\n';
    out.flush();
    results.push_back(std::move(r));
  }
  return results;
}

inline bool all_passed(const std::vector<CriterionResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace sparsemul::selftest
