#pragma once

// Random access into the bi-infinite word through balanced ternary.
//
// Write i = sum d_k 3^(m-1-k) with digits in {-1,0,+1}, most significant
// first. At every level phi^n(2) = sigma(u) u rho(u), so the leading digit
// picks the left, middle or right third and with it an outer letter
// permutation (sigma, identity, rho). Reading digits MSB-first therefore
// builds the product pi(d_0) * pi(d_1) * ... and the symbol at i is that
// product applied to 2. The states are the permutations reachable from the
// identity, which is the whole of S3.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "powerfree/word.hpp"

namespace powerfree {

/// Digits in {-1, 0, +1}, most significant first. The canonical form has no
/// leading zero; zero is the empty sequence.
class BalancedTernaryDigits {
 public:
  BalancedTernaryDigits() = default;
  /// Leading zeros are kept as given. Throws std::invalid_argument for a
  /// digit outside {-1, 0, 1}.
  explicit BalancedTernaryDigits(std::vector<int> digits);

  /// Parses the 'T','0','1' rendering (T = -1), e.g. "1TT" = 5.
  static BalancedTernaryDigits parse(std::string_view text);

  const std::vector<int>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_canonical() const noexcept { return digits_.empty() || digits_.front() != 0; }

  /// 'T','0','1' rendering; zero renders as "0".
  std::string to_string() const;

  friend bool operator==(const BalancedTernaryDigits&, const BalancedTernaryDigits&) = default;

 private:
  std::vector<int> digits_;
};

BalancedTernaryDigits to_balanced_ternary(std::int64_t i);

/// Leading zeros are accepted. Throws std::overflow_error if the value does
/// not fit in 64 bits.
std::int64_t from_balanced_ternary(const BalancedTernaryDigits& d);

/// Letter permutation contributed by one digit: -1 -> SIGMA, 0 -> id, +1 -> RHO.
Permutation3 digit_permutation(int digit);

/// Symbol of the bi-infinite word at centered index i.
Symbol symbol_at_infinite(std::int64_t i);

/// Runs the permutation automaton over explicit digits (leading zeros allowed).
Symbol symbol_from_digits(const BalancedTernaryDigits& d);

struct AutomatonTable {
  static constexpr std::size_t kStart = 0;

  /// states[k] is the accumulated permutation of state k; state 0 is identity.
  std::vector<Permutation3> states;
  /// next[k][digit + 1] for digit in {-1, 0, +1}.
  std::vector<std::array<std::size_t, 3>> next;
  /// output[k] = states[k](2).
  std::vector<Symbol> output;

  std::size_t transition(std::size_t state, int digit) const;
  std::size_t index_of(const Permutation3& perm) const;
};

/// States reachable from the identity, discovered breadth-first in digit
/// order -1, 0, +1. Built once; the returned table is immutable.
const AutomatonTable& automaton_table();

}  // namespace powerfree
