#pragma once

// Executable checks of the structural facts about phi^n(2): squarefreeness,
// permutation triples, middle extraction, the four-equal-leaders exclusion,
// 7/4^+-freeness, the short boundary windows, and the two combinatorial
// steps used to rule out long repetitions (aligning a repetition of period
// divisible by 3 to triple boundaries, and propagating equal triple leaders
// along a repetition whose period is not).

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powerfree/power.hpp"
#include "powerfree/word.hpp"

namespace powerfree {

/// A caller-supplied occurrence or word does not meet an operation's
/// requirements.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { pass, fail, vacuous };

std::string_view to_string(CheckStatus status);
CheckStatus parse_check_status(std::string_view text);

struct Witness {
  std::size_t start = 0;
  std::size_t length = 0;
  std::optional<std::size_t> period;
  std::string factor;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string check_name;
  std::optional<unsigned> level;
  CheckStatus status = CheckStatus::pass;
  /// Present whenever status == fail.
  std::optional<Witness> witness;
  std::string detail;
  /// Positions of the equal symbols found by leader propagation.
  std::vector<std::size_t> chain;
  double millis = 0.0;

  bool passed() const noexcept { return status != CheckStatus::fail; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// Word-level checks. These accept arbitrary words so that mutated and
// synthetic inputs can be fed in.
CheckReport check_squarefree(const TernaryWord& w);
CheckReport check_triples(const TernaryWord& w);
CheckReport check_preimage(const TernaryWord& w, const TernaryWord& expected);
CheckReport check_four_tuple(const TernaryWord& w);
/// With cross_check, the oracle engine must agree with the optimized one.
CheckReport check_main(const TernaryWord& w, bool cross_check);

// Level checks on phi^n(2). All throw ResourceLimitError when n > cap.
CheckReport check_base_case(unsigned n);
CheckReport check_squarefree(unsigned n, unsigned cap = kDefaultLevelCap);
CheckReport check_triples(unsigned n, unsigned cap = kDefaultLevelCap);
/// Requires n >= 1.
CheckReport check_preimage(unsigned n, unsigned cap = kDefaultLevelCap);
CheckReport check_four_tuple(unsigned n, unsigned cap = kDefaultLevelCap);
/// Optimized engine; the oracle also runs for n <= 5.
CheckReport check_main(unsigned n, unsigned cap = kDefaultLevelCap);

/// Largest factor length examined on each side of a boundary: ceil(13 * 7/4).
inline constexpr std::size_t kBoundaryWindow = 23;

/// Number of windows of length 2..max_length that straddle one boundary.
std::size_t straddling_window_count(std::size_t max_length = kBoundaryWindow);

/// Every factor of length <= 23 that straddles the junction of
/// sigma(phi^n(2)) phi^n(2) or of phi^n(2) rho(phi^n(2)) must be
/// 7/4^+-free. Requires n >= 3 (std::invalid_argument otherwise).
CheckReport check_boundary_windows(unsigned n, unsigned cap = kDefaultLevelCap);

/// Same check on an explicit pair left|right.
CheckReport check_junction(const TernaryWord& left, const TernaryWord& right,
                           std::size_t max_length = kBoundaryWindow);

/// Extends a repetition whose period is a multiple of 3 so that it starts at
/// a position = 0 (mod 3) and ends at one = 2 (mod 3), deducing each added
/// symbol from triple completion alone. Requires every aligned triple of w
/// to be a permutation of 123, the occurrence to hold in w, and enough
/// matched length on the side being extended; the start = 2 and end = 0
/// branches also need the six-symbol neighbourhoods around both copies to
/// be squarefree. Throws PreconditionError otherwise.
RepetitionOccurrence extend_occurrence(const TernaryWord& w, const RepetitionOccurrence& occ);

/// Minimum matched length for leader propagation.
inline constexpr std::size_t kPropagationMatch = 11;

/// Closes the equalities implied by a repetition with period not divisible
/// by 3 under triple completion (two equal pairs across two permutation
/// triples force the third pair equal), then reports the longest run of
/// consecutive triples whose leaders are forced equal. Passes iff that run
/// covers at least 4 triples. chain lists the leader positions; detail gives
/// the longest forced runs at each offset.
/// Throws PreconditionError when triples are not permutations, the period
/// is divisible by 3, the occurrence does not hold, or its matched length
/// is below 11.
CheckReport leader_propagation(const TernaryWord& w, const RepetitionOccurrence& occ);

/// Longest run of consecutive triples with forced-equal symbols at each
/// offset (leader, middle, trailer), under the same deduction and
/// preconditions as leader_propagation.
std::array<std::size_t, 3> forced_offset_runs(const TernaryWord& w, const RepetitionOccurrence& occ);

/// Every maximal repetition in phi^n(2) with period divisible by 3 that
/// extend_occurrence accepts must satisfy its postconditions.
CheckReport check_triple_alignment(unsigned n, unsigned cap = kDefaultLevelCap);

/// Any repetition in phi^n(2) with period not divisible by 3 and matched
/// length >= 11 is fed to leader_propagation; finding one at all is a
/// failure. Reports vacuous when there is none.
CheckReport check_leader_propagation(unsigned n, unsigned cap = kDefaultLevelCap);

/// Check names in canonical run order.
const std::vector<std::string>& check_names();

/// Runs the selected checks (all when `only` is empty) for every applicable
/// level in 1..n_max, in canonical (check, n) order. Base cases cover
/// n = 1..min(3, n_max); boundary windows cover n = 3..n_max-1.
/// Throws std::invalid_argument for n_max == 0 or unknown names and
/// ResourceLimitError when n_max > cap.
std::vector<CheckReport> run_all(unsigned n_max, const std::vector<std::string>& only = {},
                                 unsigned cap = kDefaultLevelCap);

/// Fixed-width table without timings, so it is byte-stable across runs.
std::string render_table(const std::vector<CheckReport>& reports);

/// JSON array, one object per report: name, n, status, passed, witness,
/// detail, chain, millis.
std::string render_json(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json(std::string_view text);

}  // namespace powerfree
