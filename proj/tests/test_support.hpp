#pragma once

// Shared generators and brute-force oracles. Nothing here calls the
// library's period or freeness routines.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "powerfree/power.hpp"
#include "powerfree/rational.hpp"
#include "powerfree/word.hpp"

namespace powerfree::testing {

inline TernaryWord W(const std::string& text) { return TernaryWord::parse(text); }

inline TernaryWord random_word(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> letter(1, 3);
  std::vector<Symbol> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.emplace_back(letter(rng));
  return TernaryWord(std::move(out));
}

inline const std::array<std::string, 6>& permutations_of_123() {
  static const std::array<std::string, 6> perms{"123", "132", "213", "231", "312", "321"};
  return perms;
}

/// Concatenation of `blocks` uniformly random permutations of 123.
inline TernaryWord random_triple_word(std::mt19937_64& rng, std::size_t blocks) {
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  std::string text;
  for (std::size_t k = 0; k < blocks; ++k) text += permutations_of_123()[pick(rng)];
  return W(text);
}

/// Smallest p with w[i] == w[i+p] for every valid i, by direct scan.
inline std::size_t brute_least_period(const std::string& w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size(); ++i)
      if (w[i] != w[i + p]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return w.size();
}

inline bool brute_violates(std::size_t length, std::size_t period, const Rational& threshold,
                           Mode mode) {
  const long long lhs = static_cast<long long>(length) * threshold.denominator();
  const long long rhs = threshold.numerator() * static_cast<long long>(period);
  return mode == Mode::plus ? lhs > rhs : lhs >= rhs;
}

/// Whole-word verdict from enumerating every factor.
inline bool brute_free(const std::string& w, const Rational& threshold, Mode mode) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len)
      if (brute_violates(len, brute_least_period(w.substr(i, len)), threshold, mode)) return false;
  return true;
}

/// Direct scan for a factor uu.
inline bool has_square(const std::string& w) {
  for (std::size_t half = 1; 2 * half <= w.size(); ++half)
    for (std::size_t i = 0; i + 2 * half <= w.size(); ++i)
      if (w.compare(i, half, w, i + half, half) == 0) return true;
  return false;
}

/// Builds a word of `blocks` permutation triples in which w[i] == w[i + period]
/// for i in [start, start + matched), choosing triples at random and
/// restarting on a dead end. Returns nullopt after max_attempts restarts.
// Random word of permutation triples with w[i] == w[i + period] for
// start <= i < start + matched. Positions tied by the repetition form
// classes; a valid word is a 3-colouring of the classes in which the three
// members of every triple differ. nullopt means no such word exists.
inline std::optional<TernaryWord> plant_repetition(std::mt19937_64& rng, std::size_t blocks,
                                                   std::size_t start, std::size_t period,
                                                   std::size_t matched) {
  const std::size_t n = 3 * blocks;
  if (start + period + matched > n) return std::nullopt;
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = i >= start + period && i < start + period + matched ? cls[i - period] : i;

  std::vector<std::size_t> nodes;
  std::vector<std::size_t> index(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (index[cls[i]] == n) {
      index[cls[i]] = nodes.size();
      nodes.push_back(cls[i]);
    }
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (std::size_t t = 0; t < n; t += 3)
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        const std::size_t u = index[cls[t + a]], v = index[cls[t + b]];
        if (u == v) return std::nullopt;
        adj[u].push_back(v);
        adj[v].push_back(u);
      }

  std::vector<int> colour(nodes.size(), 0);
  std::vector<std::array<int, 3>> order(nodes.size());
  std::vector<int> tried(nodes.size(), 0);
  std::size_t k = 0;
  while (k < nodes.size()) {
    if (tried[k] == 0) {
      order[k] = {1, 2, 3};
      std::shuffle(order[k].begin(), order[k].end(), rng);
    }
    bool placed = false;
    while (tried[k] < 3 && !placed) {
      const int c = order[k][static_cast<std::size_t>(tried[k]++)];
      placed = std::none_of(adj[k].begin(), adj[k].end(), [&](std::size_t v) { return v < k && colour[v] == c; });
      if (placed) colour[k] = c;
    }
    if (placed) {
      ++k;
      continue;
    }
    tried[k] = 0;
    colour[k] = 0;
    if (k == 0) return std::nullopt;
    --k;
  }
  std::string text(n, '0');
  for (std::size_t i = 0; i < n; ++i) text[i] = static_cast<char>('0' + colour[index[cls[i]]]);
  return W(text);
}

}  // namespace powerfree::testing
