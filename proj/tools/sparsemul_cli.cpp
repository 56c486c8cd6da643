// Command-line front end: count, enumerate, least, estimate, conjecture, selftest.
//
// Exit status: 0 success, 1 formula/oracle disagreement or failed selftest,
// 2 parse failure, 3 violated hypothesis, 4 cap exceeded.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparsemul/selftest.hpp"
#include "sparsemul/sparsemul.hpp"

namespace {

using namespace sparsemul;

enum class Format { text, json, csv };

struct Options {
  std::vector<std::string> polys;
  std::string degrees;
  int weight = 0;
  std::string format = "text";
  std::uint64_t max_e = kDefaultOracleCap;
  std::uint64_t max_degree = kDefaultMaxSearchDegree;
  bool all_ties = false;
  bool observe = false;
  std::string raw_count;
  std::uint64_t raw_exponent = 0;
  int raw_total_degree = 0;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ParseError("unknown format '" + s + "' (expected text, json or csv)");
}

std::vector<int> parse_degree_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(item, &used);
      if (used != item.size() || d < 1) throw ParseError("");
      out.push_back(d);
    } catch (const std::exception&) {
      throw ParseError("invalid degree '" + item + "' in --degrees");
    }
  }
  if (out.empty()) throw ParseError("--degrees is empty");
  return out;
}

// Polynomials from --poly or auto-picked from --degrees; exactly one source.
std::vector<Gf2Poly> input_polys(const Options& o) {
  if (o.polys.empty() == o.degrees.empty()) throw ParseError("give exactly one of --poly or --degrees");
  std::vector<Gf2Poly> out;
  if (!o.polys.empty()) {
    for (const auto& p : o.polys) out.push_back(Gf2Poly::parse(p));
  } else {
    for (int d : parse_degree_list(o.degrees)) out.push_back(first_primitive(d));
  }
  return out;
}

// Target polynomial for enumerate/least: a single polynomial needs only
// f(0) = 1, several must form a valid product.
struct Target {
  std::vector<Gf2Poly> polys;
  Gf2Poly product;
  std::uint64_t exponent = 0;
};

Target input_target(const Options& o) {
  Target t;
  t.polys = input_polys(o);
  if (t.polys.size() == 1) {
    t.product = t.polys.front();
    t.exponent = order(t.product);
  } else {
    const auto spec = ProductSpec::make(t.polys);
    t.product = spec.product;
    t.exponent = spec.exponent;
  }
  return t;
}

void require_weight(int t, bool bounded) {
  if (t < 3 || (bounded && t > 5))
    throw ParseError("-t/--weight must be " + std::string(bounded ? "3, 4 or 5" : "at least 3"));
}

std::string polys_text(const std::vector<Gf2Poly>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

int cmd_count(const Options& o) {
  const auto fmt = parse_format(o.format);
  require_weight(o.weight, true);
  const auto spec = ProductSpec::make(input_polys(o));
  const auto rep = count_product_recursive(spec, o.weight);
  std::optional<std::uint64_t> oracle;
  if (spec.exponent <= o.max_e) oracle = oracle_count_product(spec, o.weight, o.max_e);
  const bool agree = !oracle || Count(*oracle) == rep.exact;

  switch (fmt) {
    case Format::json: {
      auto j = to_json(rep);
      j["oracle"] = oracle ? json(*oracle) : json(nullptr);
      j["agree"] = oracle ? json(agree) : json(nullptr);
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "degrees;t;exact;lower_bound;route;oracle;agree\n"
                << to_csv_row(rep) << ';' << (oracle ? std::to_string(*oracle) : "") << ';'
                << (oracle ? (agree ? "true" : "false") : "") << '\n';
      break;
    case Format::text:
      std::cout << "polynomials: " << polys_text(rep.polys) << '\n'
                << "t: " << rep.weight << '\n'
                << "exact_count: " << rep.exact << " (" << to_string(rep.route) << ")\n"
                << "lower_bound: " << rep.lower_bound << '\n';
      if (oracle)
        std::cout << "oracle: " << *oracle << (agree ? " (agree)" : " (DISAGREE)") << '\n';
      else
        std::cout << "oracle: skipped (product exponent " << spec.exponent << " > --max-e " << o.max_e << ")\n";
      break;
  }
  if (!agree) {
    std::cerr << "error: closed-form count " << rep.exact << " disagrees with oracle count " << *oracle << '\n';
    return 1;
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto fmt = parse_format(o.format);
  require_weight(o.weight, true);
  const auto target = input_target(o);
  if (target.exponent > o.max_e)
    throw CapExceeded("exponent " + std::to_string(target.exponent) + " exceeds --max-e " + std::to_string(o.max_e));
  std::optional<std::uint64_t> cap;
  if (o.max_degree < target.exponent) cap = o.max_degree;
  const auto list = enumerate_tnomials(target.product, target.exponent, o.weight, cap);
  if (fmt == Format::json) {
    json a = json::array();
    for (const auto& t : list) a.push_back(to_json(t));
    std::cout << a.dump() << '\n';
  } else {
    for (const auto& t : list) std::cout << t.to_csv() << '\n';
  }
  return 0;
}

int cmd_least(const Options& o) {
  const auto fmt = parse_format(o.format);
  require_weight(o.weight, false);
  const auto target = input_target(o);
  const auto hits = least_tnomial_multiples(target.product, target.exponent, o.weight, o.max_degree, o.all_ties);
  const auto& best = hits.front();
  switch (fmt) {
    case Format::json: {
      json j;
      j["polynomials"] = polys_to_json(target.polys);
      j["t"] = o.weight;
      j["multiple"] = best.to_string();
      j["exponents"] = to_json(best);
      j["degree"] = best.degree();
      if (o.all_ties) {
        j["ties"] = json::array();
        for (const auto& h : hits) j["ties"].push_back(h.to_string());
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      std::cout << "degree;exponents\n";
      for (const auto& h : hits) std::cout << h.degree() << ';' << h.to_csv() << '\n';
      break;
    case Format::text:
      for (const auto& h : hits) std::cout << h.to_string() << " (degree " << h.degree() << ")\n";
      break;
  }
  return 0;
}

int cmd_estimate(const Options& o) {
  const auto fmt = parse_format(o.format);
  require_weight(o.weight, false);
  EstimateReport rep;
  if (!o.raw_count.empty()) {
    Count n;
    try {
      n = Count(o.raw_count);
    } catch (const std::exception&) {
      throw ParseError("invalid --count '" + o.raw_count + "'");
    }
    rep = estimate_least_degree(n, o.raw_exponent, o.raw_total_degree, o.weight);
  } else {
    if (o.weight > 5) throw ParseError("exact counts need -t 3, 4 or 5; pass --count for other weights");
    const auto spec = ProductSpec::make(input_polys(o));
    const auto n = count_product_recursive(spec, o.weight).exact;
    rep = estimate_least_degree(n, spec.exponent, spec.total_degree(), o.weight);
    if (o.observe) rep.observed_least_degree = least_tnomial_multiple(spec, o.weight, o.max_degree).degree();
  }
  switch (fmt) {
    case Format::json: std::cout << to_json(rep).dump(2) << '\n'; break;
    case Format::csv:
      std::cout << "exact_N;e;d;t;crude_c;refined_c;observed\n"
                << rep.exact_count << ';' << rep.exponent << ';' << rep.total_degree << ';' << rep.weight << ';'
                << std::fixed << std::setprecision(4) << rep.crude_c << ';' << rep.refined_c << ';'
                << (rep.observed_least_degree ? std::to_string(*rep.observed_least_degree) : "") << '\n';
      break;
    case Format::text:
      std::cout << "exact_N: " << rep.exact_count << '\n'
                << "e: " << rep.exponent << '\n'
                << "d: " << rep.total_degree << '\n'
                << "t: " << rep.weight << '\n'
                << "crude_c: " << std::fixed << std::setprecision(4) << rep.crude_c << '\n'
                << "refined_c: " << rep.refined_c << '\n';
      if (rep.observed_least_degree) std::cout << "observed_least_degree: " << *rep.observed_least_degree << '\n';
      break;
  }
  return 0;
}

int cmd_conjecture(const Options& o) {
  const auto fmt = parse_format(o.format);
  if (fmt == Format::csv) throw ParseError("conjecture supports --format text or json");
  require_weight(o.weight, true);
  const auto spec = ProductSpec::make(input_polys(o));
  const auto rep = check_conjecture(spec, o.weight, o.max_degree);
  if (fmt == Format::json) {
    std::cout << to_json(rep).dump(2) << '\n';
    return 0;
  }
  std::cout << "polynomials: " << polys_text(spec.polys()) << '\n'
            << "product: " << spec.product << " (" << rep.product_weight << "-nomial)\n"
            << "least " << o.weight << "-nomial multiple: " << rep.least_multiple << '\n';
  std::cout << "hypotheses: 4 <= t < tau " << (rep.weight_in_range ? "yes" : "no") << ", all N_r,t > 0 "
            << (rep.all_factor_counts_positive ? "yes" : "no") << '\n';
  for (std::size_t r = 0; r < rep.residues.size(); ++r) {
    std::cout << "mod " << spec.factors[r].exponent << ":";
    for (auto v : rep.residues[r]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  for (const auto& c : rep.collisions)
    std::cout << "collision: I" << c.v << " = I" << c.w << " = " << c.residue << " mod "
              << spec.factors[c.factor - 1].exponent << '\n';
  std::cout << "verdict: " << to_string(rep.verdict) << '\n';
  return 0;
}

void add_input_options(CLI::App* sub, Options& o, bool weight_required = true) {
  sub->add_option("--poly", o.polys, "polynomial, caret (x^4+x+1) or hex mask (0x13); repeatable");
  sub->add_option("--degrees", o.degrees, "comma-separated degrees; picks the first primitive polynomial of each");
  auto* w = sub->add_option("-t,--weight", o.weight, "weight t of the multiples");
  if (weight_required) w->required();
  sub->add_option("--format", o.format, "text, json or csv")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse t-nomial multiples of products of primitive polynomials over GF(2)"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "exact number of weight-t multiples, checked against the oracle");
  add_input_options(count, o);
  count->add_option("--max-e", o.max_e, "largest product exponent for the oracle cross-check")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "list weight-t multiples of degree below the exponent");
  add_input_options(enumerate, o);
  enumerate->add_option("--max-e", o.max_e, "largest exponent accepted")->capture_default_str();
  enumerate->add_option("--max-degree", o.max_degree, "only multiples with every exponent <= this");

  auto* least = app.add_subcommand("least", "least-degree weight-t multiple");
  add_input_options(least, o);
  least->add_option("--max-degree", o.max_degree, "search ceiling")->capture_default_str();
  least->add_flag("--all-ties", o.all_ties, "print every multiple attaining the least degree");

  auto* estimate = app.add_subcommand("estimate", "estimate the least degree from the exact count");
  add_input_options(estimate, o);
  estimate->add_option("--count", o.raw_count, "use this multiple count instead of computing it");
  estimate->add_option("--exponent", o.raw_exponent, "product exponent e (with --count)");
  estimate->add_option("--total-degree", o.raw_total_degree, "sum of factor degrees d (with --count)");
  estimate->add_option("--max-degree", o.max_degree, "search ceiling for --observe")->capture_default_str();
  estimate->add_flag("--observe", o.observe, "also search for the actual least degree");

  auto* conjecture = app.add_subcommand("conjecture", "check the residue-distinctness conjecture on the least multiple");
  add_input_options(conjecture, o);
  conjecture->add_option("--max-degree", o.max_degree, "search ceiling")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) return cmd_count(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*least) return cmd_least(o);
    if (*estimate) return cmd_estimate(o);
    if (*conjecture) return cmd_conjecture(o);
    if (*selftest) return selftest::all_passed(selftest::run_all(std::cout)) ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
