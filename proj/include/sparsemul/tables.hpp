#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf2poly.hpp"
#include "order.hpp"

namespace sparsemul {

/// Tables are refused beyond this many entries.
inline constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 26;
/// Largest modulus degree for which a dense residue -> index array is kept.
inline constexpr int kMaxDenseIndexDegree = 26;

namespace detail {

// x * r mod m on word-sized residues; m_mask includes the leading bit.
inline std::uint64_t times_x(std::uint64_t r, std::uint64_t m_mask, int deg) {
  r <<= 1;
  if ((r >> deg) & 1) r ^= m_mask;
  return r;
}

}  // namespace detail

/// Discrete logarithms and Zech logarithms for a primitive modulus:
/// x^zech(i) = x^i + 1 mod f for every i in [1, e-1].
class ZechTable {
public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  explicit ZechTable(const FactorSpec& f) : modulus_(f.poly), exponent_(f.exponent) {
    if (!is_primitive(f.poly)) throw HypothesisError("build_zech: " + f.poly.to_string() + " is not primitive");
    if (f.exponent > kMaxTableEntries)
      throw CapExceeded("build_zech: exponent " + std::to_string(f.exponent) + " exceeds table cap 2^26");
    const auto mask = f.poly.mask();
    const int d = f.degree;
    antilog_.resize(exponent_);
    dlog_.assign(std::uint64_t{1} << d, kNone);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exponent_; ++i) {
      antilog_[i] = static_cast<std::uint32_t>(r);
      dlog_[r] = static_cast<std::uint32_t>(i);
      r = detail::times_x(r, mask, d);
    }
    zech_.assign(exponent_, kNone);
    for (std::uint64_t i = 1; i < exponent_; ++i) zech_[i] = dlog_[antilog_[i] ^ 1u];
  }

  [[nodiscard]] const Gf2Poly& modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return exponent_; }

  /// Residue of x^i, i taken mod e.
  [[nodiscard]] std::uint64_t antilog(std::uint64_t i) const { return antilog_[i % exponent_]; }

  /// Exponent of a nonzero residue.
  [[nodiscard]] std::uint64_t dlog(std::uint64_t residue) const {
    if (residue == 0 || residue >= dlog_.size()) throw HypothesisError("dlog: residue out of range");
    return dlog_[residue];
  }

  [[nodiscard]] std::uint64_t zech(std::uint64_t i) const {
    if (i == 0 || i >= exponent_) throw HypothesisError("zech: index must lie in [1, e-1]");
    return zech_[i];
  }

private:
  Gf2Poly modulus_;
  std::uint64_t exponent_;
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::uint32_t> zech_;
};

inline ZechTable build_zech(const FactorSpec& f) { return ZechTable(f); }

/// residues[i] = x^i mod m for 0 <= i < e, where e = ord(m). The residues
/// are pairwise distinct, so a residue value maps back to a single index.
class ResidueTable {
public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  ResidueTable(const Gf2Poly& m, std::uint64_t e) : modulus_(m), exponent_(e) {
    if (m.degree() < 1 || !m.constant_term()) throw HypothesisError("residue table needs m(0) = 1 and deg m >= 1");
    if (m.degree() > kMaxDenseIndexDegree)
      throw CapExceeded("residue table: modulus degree " + std::to_string(m.degree()) + " exceeds " +
                        std::to_string(kMaxDenseIndexDegree));
    if (e > kMaxTableEntries) throw CapExceeded("residue table: exponent " + std::to_string(e) + " exceeds cap 2^26");
    const auto actual = order(m);
    if (actual != e)
      throw HypothesisError("residue table: given exponent " + std::to_string(e) + " but ord(" + m.to_string() +
                            ") = " + std::to_string(actual));
    const auto mask = m.mask();
    const int d = m.degree();
    residues_.resize(e);
    index_.assign(std::uint64_t{1} << d, kNone);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      residues_[i] = r;
      index_[r] = static_cast<std::uint32_t>(i);
      r = detail::times_x(r, mask, d);
    }
  }

  [[nodiscard]] const Gf2Poly& modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint64_t exponent() const noexcept { return exponent_; }
  [[nodiscard]] int degree() const noexcept { return modulus_.degree(); }
  [[nodiscard]] std::uint64_t operator[](std::uint64_t i) const { return residues_[i]; }
  [[nodiscard]] const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

  /// Index i in [0, e) with residues[i] == value, or kNone.
  [[nodiscard]] std::uint32_t index_of(std::uint64_t value) const noexcept {
    return value < index_.size() ? index_[value] : kNone;
  }

private:
  Gf2Poly modulus_;
  std::uint64_t exponent_;
  std::vector<std::uint64_t> residues_;
  std::vector<std::uint32_t> index_;
};

inline ResidueTable build_residue_table(const Gf2Poly& m, std::uint64_t e) { return ResidueTable(m, e); }

}  // namespace sparsemul
