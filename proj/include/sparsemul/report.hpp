#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crt_lift.hpp"
#include "degree_analysis.hpp"
#include "formulas.hpp"
#include "tnomial.hpp"

namespace sparsemul {

using json = nlohmann::ordered_json;

/// Counts that fit 64 bits become JSON numbers, larger ones decimal strings.
inline json count_to_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

inline json polys_to_json(const std::vector<Gf2Poly>& polys) {
  json a = json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

inline json to_json(const Tnomial& t) { return t.exponents(); }

inline json to_json(const PrefixStats& s) {
  return {{"label", s.label},
          {"e", count_to_json(s.exponent)},
          {"N3", count_to_json(s.n3)},
          {"Nt", count_to_json(s.nt)},
          {"n", count_to_json(s.shifts)}};
}

inline json to_json(const CountReport& r) {
  json j;
  j["degrees"] = r.degrees;
  j["polynomials"] = polys_to_json(r.polys);
  j["t"] = r.weight;
  j["exact_count"] = count_to_json(r.exact);
  j["lower_bound"] = count_to_json(r.lower_bound);
  j["route"] = std::string(to_string(r.route));
  j["factors"] = json::array();
  for (const auto& f : r.factors) j["factors"].push_back(to_json(f));
  j["prefixes"] = json::array();
  for (const auto& p : r.prefixes) j["prefixes"].push_back(to_json(p));
  return j;
}

inline std::string join_degrees(const std::vector<int>& degrees) {
  std::string s;
  for (int d : degrees) {
    if (!s.empty()) s += ',';
    s += std::to_string(d);
  }
  return s;
}

/// "degrees;t;exact;lower_bound;route"
inline std::string to_csv_row(const CountReport& r) {
  return join_degrees(r.degrees) + ";" + std::to_string(r.weight) + ";" + r.exact.str() + ";" + r.lower_bound.str() +
         ";" + std::string(to_string(r.route));
}

inline json to_json(const CaseTally& t) {
  return {{"case", std::string(t.label)},
          {"generated", t.generated},
          {"accepted", t.accepted},
          {"distinct", t.distinct},
          {"closed_form", count_to_json(t.closed_form)}};
}

inline json to_json(const EstimateReport& r) {
  json j;
  j["exact_N"] = count_to_json(r.exact_count);
  j["e"] = r.exponent;
  j["d"] = r.total_degree;
  j["t"] = r.weight;
  j["crude_c"] = r.crude_c;
  j["refined_c"] = r.refined_c;
  j["observed_least_degree"] = r.observed_least_degree ? json(*r.observed_least_degree) : json(nullptr);
  return j;
}

inline json to_json(const ConjectureReport& r) {
  json j;
  j["polynomials"] = polys_to_json(r.product.polys());
  j["exponents"] = json::array();
  for (const auto& f : r.product.factors) j["exponents"].push_back(f.exponent);
  j["product"] = r.product.product.to_string();
  j["t"] = r.weight;
  j["tau"] = r.product_weight;
  j["hypotheses"] = {{"weight_in_range", r.weight_in_range},
                     {"factor_counts_positive", r.all_factor_counts_positive},
                     {"factor_counts", r.factor_counts}};
  j["least_multiple"] = r.least_multiple.to_string();
  j["least_exponents"] = to_json(r.least_multiple);
  j["residues"] = r.residues;
  j["collisions"] = json::array();
  for (const auto& c : r.collisions)
    j["collisions"].push_back({{"factor", c.factor}, {"v", c.v}, {"w", c.w}, {"residue", c.residue}});
  j["zero_slots"] = json::array();
  for (const auto& z : r.zero_slots) j["zero_slots"].push_back({{"factor", z.factor}, {"v", z.v}});
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

}  // namespace sparsemul
