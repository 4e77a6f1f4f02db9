#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace powerfree {

__extension__ typedef __int128 WideInt;

/// Exact rational in lowest terms with a positive denominator.
/// Ordering uses 128-bit cross-multiplication; there is no floating point.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// Accepts "p/q" or a plain integer such as "2". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// "7/4", or "2" when the denominator is 1.
  std::string to_string() const;
  /// Always "p/q", e.g. "2/1".
  std::string to_fraction_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const WideInt lhs = static_cast<WideInt>(a.num_) * b.den_;
    const WideInt rhs = static_cast<WideInt>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace powerfree
