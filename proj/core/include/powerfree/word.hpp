#pragma once

// Ternary words over {1,2,3}, letter permutations, and the
// doubling-by-thirds map  phi(a) = sigma(a) a rho(a).
//
// Positions are 0-based everywhere. The bi-infinite limit word is addressed
// by centered indices: index 0 is the middle symbol of every phi^n(2).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace powerfree {

/// Thrown when a requested generation level exceeds the configured cap.
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A letter of the alphabet {1,2,3}. No other value is representable.
class Symbol {
 public:
  constexpr explicit Symbol(int value) : value_(checked(value)) {}

  constexpr int value() const noexcept { return value_; }
  constexpr char to_char() const noexcept { return static_cast<char>('0' + value_); }

  static Symbol from_char(char c);

  friend constexpr bool operator==(Symbol, Symbol) = default;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;

 private:
  static constexpr std::uint8_t checked(int value) {
    if (value < 1 || value > 3) throw std::invalid_argument("symbol must be 1, 2 or 3");
    return static_cast<std::uint8_t>(value);
  }

  std::uint8_t value_;
};

inline constexpr Symbol kOne{1};
inline constexpr Symbol kTwo{2};
inline constexpr Symbol kThree{3};

/// Immutable finite word over {1,2,3}.
class TernaryWord {
 public:
  using const_iterator = std::vector<Symbol>::const_iterator;

  TernaryWord() = default;
  explicit TernaryWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Parses the compact form "1231...". Any other character throws
  /// std::invalid_argument naming the offending position.
  static TernaryWord parse(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t pos) const noexcept { return symbols_[pos]; }
  Symbol at(std::size_t pos) const { return symbols_.at(pos); }

  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Factor [pos, pos + len). Throws std::out_of_range if it leaves the word.
  TernaryWord factor(std::size_t pos, std::size_t len) const;

  /// Copy with one position replaced; used to build mutated test inputs.
  TernaryWord with_symbol(std::size_t pos, Symbol s) const;

  std::string to_string() const;
  /// Groups consecutive triples with single spaces: "213 123 132".
  std::string to_spaced_string() const;

  friend TernaryWord operator+(const TernaryWord& a, const TernaryWord& b);
  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// A bijection of {1,2,3}, stored as the images of 1, 2 and 3.
class Permutation3 {
 public:
  constexpr Permutation3() : images_{kOne, kTwo, kThree} {}
  constexpr Permutation3(Symbol image1, Symbol image2, Symbol image3)
      : images_{image1, image2, image3} {
    if (image1 == image2 || image1 == image3 || image2 == image3)
      throw std::invalid_argument("permutation images must be distinct");
  }

  static constexpr Permutation3 identity() { return {}; }

  constexpr Symbol operator()(Symbol s) const noexcept {
    return images_[static_cast<std::size_t>(s.value() - 1)];
  }

  /// Composition: (a * b)(x) = a(b(x)).
  friend constexpr Permutation3 operator*(const Permutation3& a, const Permutation3& b) {
    return Permutation3(a(b(kOne)), a(b(kTwo)), a(b(kThree)));
  }

  constexpr Permutation3 inverse() const {
    std::array<int, 3> inv{};
    for (int x = 1; x <= 3; ++x)
      inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x - 1)].value() - 1)] = x;
    return Permutation3(Symbol(inv[0]), Symbol(inv[1]), Symbol(inv[2]));
  }

  constexpr const std::array<Symbol, 3>& images() const noexcept { return images_; }

  /// "123"-style image string, e.g. SIGMA -> "213".
  std::string to_string() const;

  friend constexpr bool operator==(const Permutation3&, const Permutation3&) = default;

 private:
  std::array<Symbol, 3> images_;
};

/// Exchanges 1 and 2.
inline constexpr Permutation3 SIGMA{kTwo, kOne, kThree};
/// Exchanges 2 and 3.
inline constexpr Permutation3 RHO{kOne, kThree, kTwo};

/// Largest level generate() accepts unless overridden.
inline constexpr unsigned kDefaultLevelCap = 12;

TernaryWord apply_permutation(const Permutation3& perm, const TernaryWord& w);

/// sigma(w) w rho(w); the middle third of the result is w itself.
TernaryWord phi(const TernaryWord& w);

/// phi^n(2), of length 3^n. generate(0) is the seed "2".
/// Throws ResourceLimitError when n > cap.
TernaryWord generate(unsigned n, unsigned cap = kDefaultLevelCap);

/// (3^n - 1) / 2, the largest |i| addressable at level n.
std::int64_t half_width(unsigned n);

/// Symbol of phi^n(2) at centered index i, i.e. array offset i + (3^n - 1)/2.
/// Throws std::out_of_range when |i| > (3^n - 1)/2.
Symbol symbol_at(unsigned n, std::int64_t i, unsigned cap = kDefaultLevelCap);

/// Middle symbol of every aligned triple. Requires |w| divisible by 3.
TernaryWord extract_middles(const TernaryWord& w);

/// The |w|/3 consecutive non-overlapping length-3 blocks of w.
std::vector<TernaryWord> triples(const TernaryWord& w);

/// True iff the three symbols starting at pos are a permutation of 123.
bool is_permutation_triple(const TernaryWord& w, std::size_t pos);

}  // namespace powerfree
