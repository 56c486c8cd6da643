#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sparsemul {

/// Polynomial over GF(2). Bit i of the packed words is the coefficient of
/// x^i; storage is always trimmed so the top word is nonzero.
class Gf2Poly {
public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Gf2Poly() = default;

  static Gf2Poly from_mask(Word mask) {
    Gf2Poly p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
  }

  static Gf2Poly monomial(std::uint64_t n) {
    Gf2Poly p;
    p.words_.assign(n / kWordBits + 1, 0);
    p.words_.back() = Word{1} << (n % kWordBits);
    return p;
  }

  static Gf2Poly one() { return from_mask(1); }
  static Gf2Poly x() { return from_mask(2); }

  /// Sum of x^e over the given exponents; repeated exponents cancel.
  static Gf2Poly from_exponents(std::span<const std::uint64_t> exps) {
    Gf2Poly p;
    for (auto e : exps) p.flip(e);
    return p;
  }
  static Gf2Poly from_exponents(std::initializer_list<std::uint64_t> exps) {
    return from_exponents(std::span<const std::uint64_t>(exps.begin(), exps.size()));
  }

  /// Index of the highest set bit, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
  }

  [[nodiscard]] bool is_zero() const noexcept { return words_.empty(); }
  [[nodiscard]] bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  [[nodiscard]] bool constant_term() const noexcept { return !words_.empty() && (words_[0] & 1); }

  [[nodiscard]] bool coeff(std::uint64_t n) const noexcept {
    const auto w = n / kWordBits;
    return w < words_.size() && ((words_[w] >> (n % kWordBits)) & 1);
  }

  void flip(std::uint64_t n) {
    const auto w = n / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= Word{1} << (n % kWordBits);
    trim();
  }

  void set_coeff(std::uint64_t n, bool value) {
    if (coeff(n) != value) flip(n);
  }

  /// Number of nonzero terms.
  [[nodiscard]] int weight() const noexcept {
    int w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
  }

  /// Exponents of the nonzero terms in decreasing order.
  [[nodiscard]] std::vector<std::uint64_t> exponents() const {
    std::vector<std::uint64_t> out;
    for (int i = degree(); i >= 0; --i)
      if (coeff(static_cast<std::uint64_t>(i))) out.push_back(static_cast<std::uint64_t>(i));
    return out;
  }

  [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }

  [[nodiscard]] bool fits_word() const noexcept { return words_.size() <= 1; }

  /// Coefficient mask; only valid when degree() < 64.
  [[nodiscard]] Word mask() const {
    if (!fits_word()) throw CapExceeded("polynomial degree " + std::to_string(degree()) + " does not fit a 64-bit mask");
    return words_.empty() ? 0 : words_[0];
  }

  Gf2Poly& operator+=(const Gf2Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
  }
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  // Subtraction is addition in characteristic 2.
  friend Gf2Poly operator-(Gf2Poly a, const Gf2Poly& b) { return a += b; }

  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Gf2Poly r;
    r.words_.assign(a.words_.size() + b.words_.size(), 0);
    const auto db = static_cast<std::uint64_t>(b.degree());
    for (std::uint64_t i = 0; i <= db; ++i)
      if (b.coeff(i)) xor_shifted(r.words_, a.words_, i);
    r.trim();
    return r;
  }
  Gf2Poly& operator*=(const Gf2Poly& o) { return *this = *this * o; }

  /// Quotient and remainder; throws on a zero divisor.
  friend std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& m) {
    if (m.is_zero()) throw HypothesisError("division by the zero polynomial");
    Gf2Poly q;
    Gf2Poly r = a;
    const int dm = m.degree();
    for (int dr = r.degree(); dr >= dm; dr = r.degree()) {
      const auto shift = static_cast<std::uint64_t>(dr - dm);
      q.flip(shift);
      xor_shifted(r.words_, m.words_, shift);
      r.trim();
    }
    return {std::move(q), std::move(r)};
  }
  friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& m) { return divmod(a, m).second; }
  friend Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& m) { return divmod(a, m).first; }

  /// Formal derivative: odd-exponent terms shift down by one, even ones vanish.
  [[nodiscard]] Gf2Poly derivative() const {
    Gf2Poly d;
    for (int i = 1; i <= degree(); i += 2)
      if (coeff(static_cast<std::uint64_t>(i))) d.flip(static_cast<std::uint64_t>(i - 1));
    return d;
  }

  /// h with h^2 == *this; requires all odd coefficients to be zero.
  [[nodiscard]] Gf2Poly square_root() const {
    Gf2Poly h;
    for (int i = 0; i <= degree(); ++i) {
      if (!coeff(static_cast<std::uint64_t>(i))) continue;
      if (i % 2) throw HypothesisError("square_root of a polynomial with odd-degree terms");
      h.flip(static_cast<std::uint64_t>(i / 2));
    }
    return h;
  }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  /// Orders polynomials by their coefficient mask read as an integer.
  friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

  /// Caret notation, highest term first: "x^4+x+1".
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto e : exponents()) {
      if (!s.empty()) s += '+';
      if (e == 0) s += '1';
      else if (e == 1) s += 'x';
      else s += "x^" + std::to_string(e);
    }
    return s;
  }

  /// Hexadecimal coefficient mask: "0x13" for x^4+x+1.
  [[nodiscard]] std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (is_zero()) return "0x0";
    std::string s;
    for (int nib = degree() / 4; nib >= 0; --nib) {
      const auto bit = static_cast<std::uint64_t>(nib) * 4;
      const auto w = words_[bit / kWordBits] >> (bit % kWordBits);
      s += kDigits[w & 0xF];
    }
    return "0x" + s;
  }

  /// Accepts caret expressions ("x^4+x+1", "x^3 + x + 1") and hex masks ("0x13").
  static Gf2Poly parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s.empty()) throw ParseError("empty polynomial expression");
    if (s.size() > 2 && s[0] == '0' && s[1] == 'x') return parse_hex(s.substr(2), text);
    return parse_caret(s, text);
  }

  friend std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) { return os << p.to_string(); }

private:
  std::vector<Word> words_;

  void trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  // dst ^= src << shift; dst must be large enough or is grown.
  static void xor_shifted(std::vector<Word>& dst, const std::vector<Word>& src, std::uint64_t shift) {
    const auto ws = shift / kWordBits;
    const auto bs = static_cast<int>(shift % kWordBits);
    const auto need = src.size() + ws + 1;
    if (dst.size() < need) dst.resize(need, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i + ws] ^= src[i] << bs;
      if (bs != 0) dst[i + ws + 1] ^= src[i] >> (kWordBits - bs);
    }
  }

  static Gf2Poly parse_hex(std::string_view digits, std::string_view original) {
    if (digits.empty()) throw ParseError("hex mask without digits: '" + std::string(original) + "'");
    Gf2Poly p;
    std::uint64_t bit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
      const char c = *it;
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else throw ParseError("invalid hex digit '" + std::string(1, c) + "' in '" + std::string(original) + "'");
      for (int b = 0; b < 4; ++b)
        if ((v >> b) & 1) p.flip(bit + static_cast<std::uint64_t>(b));
    }
    return p;
  }

  static Gf2Poly parse_caret(const std::string& s, std::string_view original) {
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("cannot parse polynomial '" + std::string(original) + "': " + why);
    };
    Gf2Poly p;
    std::size_t pos = 0;
    while (true) {
      const auto end = s.find('+', pos);
      const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      if (term.empty()) throw fail("empty term");
      if (term == "1") {
        p.flip(0);
      } else if (term == "0") {
        // zero term contributes nothing
      } else if (term[0] == 'x') {
        std::uint64_t e = 1;
        if (term.size() > 1) {
          std::size_t k = 1;
          if (term[k] == '^') k += 1;
          else if (term.compare(k, 2, "**") == 0) k += 2;
          else throw fail("unexpected '" + term.substr(1) + "' after x");
          if (k >= term.size()) throw fail("missing exponent");
          e = 0;
          for (; k < term.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(term[k]))) throw fail("non-digit in exponent '" + term + "'");
            if (e > (std::uint64_t{1} << 40)) throw fail("exponent too large");
            e = e * 10 + static_cast<std::uint64_t>(term[k] - '0');
          }
        }
        p.flip(e);
      } else {
        throw fail("unrecognized term '" + term + "'");
      }
      if (end == std::string::npos) break;
      pos = end + 1;
    }
    return p;
  }
};

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;
}

inline Gf2Poly mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) { return (a * b) % m; }

/// x^n mod m by left-to-right square-and-multiply.
inline Gf2Poly pow_x_mod(std::uint64_t n, const Gf2Poly& m) {
  if (m.is_zero()) throw HypothesisError("pow_x_mod with zero modulus");
  Gf2Poly r = Gf2Poly::one() % m;
  if (n == 0) return r;
  const Gf2Poly xm = Gf2Poly::x() % m;
  for (int bit = 63 - std::countl_zero(n); bit >= 0; --bit) {
    r = mulmod(r, r, m);
    if ((n >> bit) & 1) r = mulmod(r, xm, m);
  }
  return r;
}

}  // namespace sparsemul
