#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2poly.hpp"

namespace sparsemul {

/// Weight-t polynomial x^a1 + ... + x^a(t-1) + 1 with a1 > ... > a(t-1) >= 1.
class Tnomial {
public:
  Tnomial() = default;

  /// Sorts into decreasing order; rejects zero or repeated exponents.
  explicit Tnomial(std::vector<std::uint64_t> exponents) : exps_(std::move(exponents)) {
    std::sort(exps_.begin(), exps_.end(), std::greater<>());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) throw HypothesisError("t-nomial exponents must be positive");
      if (i > 0 && exps_[i] == exps_[i - 1]) throw HypothesisError("t-nomial exponents must be distinct");
    }
  }

  [[nodiscard]] const std::vector<std::uint64_t>& exponents() const noexcept { return exps_; }
  [[nodiscard]] int weight() const noexcept { return static_cast<int>(exps_.size()) + 1; }
  [[nodiscard]] std::uint64_t degree() const noexcept { return exps_.empty() ? 0 : exps_.front(); }

  [[nodiscard]] Gf2Poly to_poly() const {
    Gf2Poly p = Gf2Poly::from_exponents(exps_);
    p.flip(0);
    return p;
  }

  /// "x^19+x^17+x^8+x^4+1"
  [[nodiscard]] std::string to_string() const { return to_poly().to_string(); }

  /// "19,17,8,4"
  [[nodiscard]] std::string to_csv() const {
    std::string s;
    for (auto e : exps_) {
      if (!s.empty()) s += ',';
      s += std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const Tnomial&, const Tnomial&) = default;
  friend auto operator<=>(const Tnomial&, const Tnomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Tnomial& t) { return os << t.to_string(); }

private:
  std::vector<std::uint64_t> exps_;
};

}  // namespace sparsemul
