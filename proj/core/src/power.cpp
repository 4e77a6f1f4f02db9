#include "powerfree/power.hpp"

#include <algorithm>
#include <stdexcept>

namespace powerfree {

Mode parse_mode(std::string_view text) {
  if (text == "strict") return Mode::strict;
  if (text == "plus") return Mode::plus;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected strict or plus)");
}

std::string_view to_string(Mode mode) { return mode == Mode::strict ? "strict" : "plus"; }

bool exceeds(std::size_t length, std::size_t period, const Rational& threshold, Mode mode) {
  // length/period vs num/den, cross-multiplied.
  const WideInt lhs = static_cast<WideInt>(length) * threshold.denominator();
  const WideInt rhs = static_cast<WideInt>(threshold.numerator()) * period;
  return mode == Mode::plus ? lhs > rhs : lhs >= rhs;
}

bool holds_in(const TernaryWord& w, const RepetitionOccurrence& occ) {
  if (occ.period == 0 || occ.total_length == 0 || occ.end() > w.size()) return false;
  for (std::size_t i = occ.start; i + occ.period < occ.end(); ++i)
    if (w[i] != w[i + occ.period]) return false;
  return true;
}

namespace {

void require_threshold(const Rational& threshold) {
  if (threshold < Rational(1)) throw std::invalid_argument("threshold must be at least 1");
}

// border[k] = length of the longest proper border of s[0..k].
void border_array(std::span<const Symbol> s, std::vector<std::size_t>& border) {
  border.assign(s.size(), 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    while (k > 0 && s[j] != s[k]) k = border[k - 1];
    if (s[j] == s[k]) ++k;
    border[j] = k;
  }
}

std::size_t naive_least_period(std::span<const Symbol> s) {
  for (std::size_t p = 1; p < s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < s.size() && ok; ++i) ok = s[i] == s[i + p];
    if (ok) return p;
  }
  return s.size();
}

struct Candidate {
  std::size_t period;
  std::size_t length;
};

// Prefers smaller period, then shorter length.
void consider(std::optional<Candidate>& best, std::size_t period, std::size_t length) {
  if (!best || period < best->period || (period == best->period && length < best->length))
    best = Candidate{period, length};
}

FreenessVerdict freeness_oracle(const TernaryWord& w, const Rational& threshold, Mode mode) {
  const auto s = w.symbols();
  for (std::size_t start = 0; start < s.size(); ++start) {
    std::optional<Candidate> best;
    for (std::size_t len = 1; start + len <= s.size(); ++len) {
      const std::size_t p = naive_least_period(s.subspan(start, len));
      if (exceeds(len, p, threshold, mode)) consider(best, p, len);
    }
    if (best) return {false, RepetitionOccurrence{start, best->period, best->length}};
  }
  return {true, std::nullopt};
}

FreenessVerdict freeness_optimized(const TernaryWord& w, const Rational& threshold, Mode mode) {
  const auto s = w.symbols();
  std::vector<std::size_t> border;
  for (std::size_t start = 0; start < s.size(); ++start) {
    border_array(s.subspan(start), border);
    std::optional<Candidate> best;
    for (std::size_t len = 1; len <= border.size(); ++len) {
      const std::size_t p = len - border[len - 1];
      if (exceeds(len, p, threshold, mode)) consider(best, p, len);
    }
    if (best) return {false, RepetitionOccurrence{start, best->period, best->length}};
  }
  return {true, std::nullopt};
}

}  // namespace

std::size_t least_period(const TernaryWord& w) {
  if (w.empty()) throw std::invalid_argument("least period of the empty word is undefined");
  std::vector<std::size_t> border;
  border_array(w.symbols(), border);
  return w.size() - border.back();
}

Rational exponent(const TernaryWord& w) {
  const std::size_t p = least_period(w);
  return Rational(static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(p));
}

FreenessVerdict check_freeness(const TernaryWord& w, const Rational& threshold, Mode mode,
                               Engine engine) {
  require_threshold(threshold);
  return engine == Engine::oracle ? freeness_oracle(w, threshold, mode)
                                  : freeness_optimized(w, threshold, mode);
}

MaxExponent max_exponent(const TernaryWord& w) {
  if (w.size() < 2) throw std::invalid_argument("max_exponent needs a word of length at least 2");
  const auto s = w.symbols();
  std::vector<std::size_t> border;
  MaxExponent best{Rational(0), {}};
  for (std::size_t start = 0; start + 1 < s.size(); ++start) {
    border_array(s.subspan(start), border);
    for (std::size_t len = 2; len <= border.size(); ++len) {
      const std::size_t p = len - border[len - 1];
      const Rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(p));
      // Strict improvement keeps the leftmost start; within a start, a tie
      // with a smaller period replaces the earlier one.
      if (e > best.value || (e == best.value && start == best.witness.start && p < best.witness.period))
        best = {e, RepetitionOccurrence{start, p, len}};
    }
  }
  return best;
}

std::vector<RepetitionOccurrence> maximal_repetitions(const TernaryWord& w, std::size_t period) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  std::vector<RepetitionOccurrence> runs;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i + period < n) {
    if (w[i] != w[i + period]) {
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    while (i + period < n && w[i] == w[i + period]) ++i;
    runs.push_back({run_start, period, (i - run_start) + period});
  }
  return runs;
}

std::vector<RepetitionOccurrence> find_violations(const TernaryWord& w, const Rational& threshold,
                                                  Mode mode) {
  require_threshold(threshold);
  const std::size_t n = w.size();
  std::vector<RepetitionOccurrence> out;
  for (std::size_t p = 1; p < n; ++p) {
    for (const auto& run : maximal_repetitions(w, p)) {
      if (exceeds(run.total_length, p, threshold, mode) &&
          least_period(w.factor(run.start, run.total_length)) == p)
        out.push_back(run);
    }
  }
  if (mode == Mode::strict && threshold == Rational(1)) {
    // Every letter is a 1-power; those inside a period-1 run are already listed.
    for (std::size_t i = 0; i < n; ++i) {
      const bool left = i > 0 && w[i - 1] == w[i];
      const bool right = i + 1 < n && w[i + 1] == w[i];
      if (!left && !right) out.push_back({i, 1, 1});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.start != b.start ? a.start < b.start : a.period < b.period;
  });
  return out;
}

std::string format_violations(const std::vector<RepetitionOccurrence>& occurrences) {
  std::string out;
  for (const auto& occ : occurrences) {
    out += std::to_string(occ.start) + ' ' + std::to_string(occ.period) + ' ' +
           std::to_string(occ.total_length) + ' ' + occ.exponent().to_fraction_string() + '\n';
  }
  return out;
}

namespace {

// Does some suffix of w[0..m) break the threshold? Only suffixes ending at the
// last letter are new, so this is the whole pruning test.
bool suffix_violates(const std::vector<int>& w, const Rational& threshold, Mode mode) {
  const std::size_t m = w.size();
  for (std::size_t p = 1; p <= m; ++p) {
    std::size_t run = 0;
    while (run + p < m && w[m - 1 - run] == w[m - 1 - run - p]) ++run;
    if (exceeds(p + run, p, threshold, mode)) return true;
  }
  return false;
}

}  // namespace

SearchSummary avoidance_search(int alphabet_size, const Rational& threshold, Mode mode,
                               std::size_t max_len) {
  if (alphabet_size != 2 && alphabet_size != 3)
    throw std::invalid_argument("unsupported alphabet size " + std::to_string(alphabet_size) +
                                " (expected 2 or 3)");
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  require_threshold(threshold);

  SearchSummary summary;
  summary.counts.assign(max_len + 1, 0);
  std::vector<int> word;
  std::vector<int> longest;
  word.reserve(max_len);

  // next_letter[d] is the next letter to try at depth d.
  std::vector<int> next_letter{1};
  while (!next_letter.empty()) {
    int& letter = next_letter.back();
    if (letter > alphabet_size) {
      next_letter.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    word.push_back(letter++);
    if (suffix_violates(word, threshold, mode)) {
      word.pop_back();
      continue;
    }
    ++summary.counts[word.size()];
    if (word.size() > longest.size()) longest = word;
    if (word.size() == max_len) break;
    next_letter.push_back(1);
  }

  std::vector<Symbol> symbols;
  symbols.reserve(longest.size());
  for (int c : longest) symbols.emplace_back(c);
  summary.longest = TernaryWord(std::move(symbols));
  summary.terminated = longest.size() < max_len;
  return summary;
}

}  // namespace powerfree
