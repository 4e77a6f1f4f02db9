#pragma once

// Periodicity and fractional powers.
//
// A factor of length L with least period p has exponent L/p. Under
// Mode::plus a word is free when every factor has exponent <= threshold
// (it avoids threshold^+ powers); under Mode::strict every factor must have
// exponent < threshold. All comparisons are exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powerfree/rational.hpp"
#include "powerfree/word.hpp"

namespace powerfree {

enum class Mode { strict, plus };

/// "strict" or "plus"; anything else throws std::invalid_argument.
Mode parse_mode(std::string_view text);
std::string_view to_string(Mode mode);

/// True when a factor of `length` with period `period` has exponent
/// length/period that breaks the threshold under `mode`.
bool exceeds(std::size_t length, std::size_t period, const Rational& threshold, Mode mode);

/// A located repetition: the factor [start, start + total_length) has
/// period `period`. When the occurrence comes from an analysis routine the
/// period is the factor's least period; occurrences built by the triple
/// alignment machinery in the verifier may carry a non-minimal period.
struct RepetitionOccurrence {
  std::size_t start = 0;
  std::size_t period = 1;
  std::size_t total_length = 1;

  Rational exponent() const {
    return Rational(static_cast<std::int64_t>(total_length), static_cast<std::int64_t>(period));
  }
  /// Length of the repeated part x in xyx, i.e. total_length - period.
  std::size_t matched_length() const noexcept {
    return total_length > period ? total_length - period : 0;
  }
  std::size_t end() const noexcept { return start + total_length; }

  friend bool operator==(const RepetitionOccurrence&, const RepetitionOccurrence&) = default;
};

/// True when occ lies inside w and w[i] == w[i + period] over its whole range.
bool holds_in(const TernaryWord& w, const RepetitionOccurrence& occ);

struct FreenessVerdict {
  bool free = true;
  /// Present iff !free: the leftmost violating factor, then smallest
  /// least period, then shortest length.
  std::optional<RepetitionOccurrence> witness;

  friend bool operator==(const FreenessVerdict&, const FreenessVerdict&) = default;
};

enum class Engine {
  /// Enumerates every factor and scans for its least period directly.
  oracle,
  /// One border-array pass per start position; O(n^2) overall.
  optimized,
};

/// Smallest p with w[i] == w[i+p] for all valid i. Throws on the empty word.
std::size_t least_period(const TernaryWord& w);

/// |w| / least_period(w). Throws on the empty word.
Rational exponent(const TernaryWord& w);

/// Throws std::invalid_argument when threshold < 1.
FreenessVerdict check_freeness(const TernaryWord& w, const Rational& threshold, Mode mode,
                               Engine engine = Engine::optimized);

struct MaxExponent {
  Rational value;
  RepetitionOccurrence witness;
};

/// Largest exponent over factors of length >= 2 (leftmost, then smallest
/// period on ties). Throws std::invalid_argument when |w| < 2.
MaxExponent max_exponent(const TernaryWord& w);

/// Maximal runs of period `period`: intervals where w[i] == w[i + period]
/// cannot be extended on either side, reported as occurrences of length
/// (matched span + period). The period need not be the least one.
std::vector<RepetitionOccurrence> maximal_repetitions(const TernaryWord& w, std::size_t period);

/// Every maximal violating repetition (cannot be extended either way with the
/// same period, and whose least period is that period), sorted by start then
/// period. Empty exactly when check_freeness reports the word free.
std::vector<RepetitionOccurrence> find_violations(const TernaryWord& w, const Rational& threshold,
                                                  Mode mode);

/// One line per occurrence: "start period length num/den".
std::string format_violations(const std::vector<RepetitionOccurrence>& occurrences);

struct SearchSummary {
  /// counts[L] = number of free words of length L visited (counts[0] is unused).
  std::vector<std::uint64_t> counts;
  TernaryWord longest;
  /// True iff the search tree was exhausted before reaching max_len.
  bool terminated = false;
};

/// Depth-first backtracking over words on {1..alphabet_size} that satisfy the
/// threshold, extending letters in increasing order and testing only suffixes
/// ending at the new letter. Stops at the first word of length max_len.
/// alphabet_size must be 2 or 3.
SearchSummary avoidance_search(int alphabet_size, const Rational& threshold, Mode mode,
                               std::size_t max_len);

}  // namespace powerfree
