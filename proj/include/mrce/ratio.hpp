#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace mrce {

namespace detail {
// 128-bit products for exact cross-multiplication of 64-bit fractions.
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;
}  // namespace detail

/// Nonnegative exact rational kept in lowest terms.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q" in lowest terms.
  std::string str() const;

  /// Decimal rendering with the given number of significant digits.
  std::string decimal(int significant_digits = 10) const;

  /// this / other; other must be nonzero.
  Ratio divided_by(const Ratio& other) const;

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a,
                                          const Ratio& b) noexcept {
    const detail::Int128 lhs = static_cast<detail::Int128>(a.num_) * b.den_;
    const detail::Int128 rhs = static_cast<detail::Int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Parses "p/q" or a bare integer.
  static Ratio parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace mrce
