#include "powerfree/balanced_ternary.hpp"
#include "powerfree/rational.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace powerfree {

BalancedTernaryDigits::BalancedTernaryDigits(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_)
    if (d < -1 || d > 1) throw std::invalid_argument("balanced ternary digit out of range");
}

BalancedTernaryDigits BalancedTernaryDigits::parse(std::string_view text) {
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'T': digits.push_back(-1); break;
      case '0': digits.push_back(0); break;
      case '1': digits.push_back(1); break;
      default:
        throw std::invalid_argument("invalid balanced ternary digit '" + std::string(1, c) + "'");
    }
  }
  return BalancedTernaryDigits(std::move(digits));
}

std::string BalancedTernaryDigits::to_string() const {
  if (digits_.empty()) return "0";
  std::string out;
  out.reserve(digits_.size());
  for (int d : digits_) out.push_back(d < 0 ? 'T' : d == 0 ? '0' : '1');
  return out;
}

BalancedTernaryDigits to_balanced_ternary(std::int64_t i) {
  // Truncating division keeps every step in range, including INT64_MIN.
  std::vector<int> lsb_first;
  while (i != 0) {
    std::int64_t q = i / 3;
    int r = static_cast<int>(i % 3);
    if (r == 2) {
      r = -1;
      ++q;
    } else if (r == -2) {
      r = 1;
      --q;
    }
    lsb_first.push_back(r);
    i = q;
  }
  std::reverse(lsb_first.begin(), lsb_first.end());
  return BalancedTernaryDigits(std::move(lsb_first));
}

std::int64_t from_balanced_ternary(const BalancedTernaryDigits& d) {
  // Once |value| passes 2^80 it can only grow, so the wide accumulator never overflows.
  constexpr WideInt kLimit = WideInt{1} << 80;
  WideInt value = 0;
  for (int digit : d.digits()) {
    value = value * 3 + digit;
    if (value > kLimit || value < -kLimit) break;
  }
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("balanced ternary value does not fit in 64 bits");
  return static_cast<std::int64_t>(value);
}

Permutation3 digit_permutation(int digit) {
  switch (digit) {
    case -1: return SIGMA;
    case 0: return Permutation3::identity();
    case 1: return RHO;
    default: throw std::invalid_argument("balanced ternary digit out of range");
  }
}

std::size_t AutomatonTable::transition(std::size_t state, int digit) const {
  if (digit < -1 || digit > 1) throw std::invalid_argument("balanced ternary digit out of range");
  return next.at(state)[static_cast<std::size_t>(digit + 1)];
}

std::size_t AutomatonTable::index_of(const Permutation3& perm) const {
  const auto it = std::find(states.begin(), states.end(), perm);
  if (it == states.end()) throw std::out_of_range("permutation is not an automaton state");
  return static_cast<std::size_t>(it - states.begin());
}

namespace {

AutomatonTable build_table() {
  AutomatonTable table;
  table.states.push_back(Permutation3::identity());
  std::deque<std::size_t> pending{0};
  std::vector<std::array<std::size_t, 3>> next(1);
  while (!pending.empty()) {
    const std::size_t k = pending.front();
    pending.pop_front();
    for (int digit = -1; digit <= 1; ++digit) {
      // The new digit's permutation acts inside the accumulated one.
      const Permutation3 target = table.states[k] * digit_permutation(digit);
      auto it = std::find(table.states.begin(), table.states.end(), target);
      std::size_t idx;
      if (it == table.states.end()) {
        idx = table.states.size();
        table.states.push_back(target);
        next.emplace_back();
        pending.push_back(idx);
      } else {
        idx = static_cast<std::size_t>(it - table.states.begin());
      }
      next[k][static_cast<std::size_t>(digit + 1)] = idx;
    }
  }
  table.next = std::move(next);
  for (const auto& perm : table.states) table.output.push_back(perm(kTwo));
  return table;
}

}  // namespace

const AutomatonTable& automaton_table() {
  static const AutomatonTable table = build_table();
  return table;
}

Symbol symbol_from_digits(const BalancedTernaryDigits& d) {
  const AutomatonTable& table = automaton_table();
  std::size_t state = AutomatonTable::kStart;
  for (int digit : d.digits()) state = table.next[state][static_cast<std::size_t>(digit + 1)];
  return table.output[state];
}

Symbol symbol_at_infinite(std::int64_t i) { return symbol_from_digits(to_balanced_ternary(i)); }

}  // namespace powerfree
