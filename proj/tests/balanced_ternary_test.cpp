#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <set>

#include "powerfree/balanced_ternary.hpp"
#include "test_support.hpp"

namespace powerfree {
namespace {

using Digits = std::vector<int>;

TEST(BalancedTernary, Examples) {
  EXPECT_EQ(to_balanced_ternary(0).digits(), Digits{});
  EXPECT_EQ(to_balanced_ternary(5).digits(), (Digits{1, -1, -1}));
  EXPECT_EQ(to_balanced_ternary(-4).digits(), (Digits{-1, -1}));
  EXPECT_EQ(to_balanced_ternary(4).digits(), (Digits{1, 1}));
  EXPECT_EQ(from_balanced_ternary(BalancedTernaryDigits{}), 0);
  EXPECT_EQ(from_balanced_ternary(BalancedTernaryDigits({1, -1, -1})), 5);
  EXPECT_EQ(from_balanced_ternary(BalancedTernaryDigits({1, 1})), 4);
}

TEST(BalancedTernary, Rendering) {
  EXPECT_EQ(to_balanced_ternary(5).to_string(), "1TT");
  EXPECT_EQ(to_balanced_ternary(0).to_string(), "0");
  EXPECT_EQ(BalancedTernaryDigits::parse("1TT"), to_balanced_ternary(5));
  EXPECT_THROW(BalancedTernaryDigits::parse("12"), std::invalid_argument);
  EXPECT_THROW(BalancedTernaryDigits({2}), std::invalid_argument);
}

TEST(BalancedTernary, LeadingZerosAreAccepted) {
  EXPECT_EQ(from_balanced_ternary(BalancedTernaryDigits({0, 0, 1, -1, -1})), 5);
  EXPECT_FALSE(BalancedTernaryDigits({0, 1}).is_canonical());
}

// Smallest m with |i| <= (3^m - 1) / 2.
std::size_t digit_count(std::int64_t i) {
  std::size_t m = 0;
  std::int64_t half = 0, pow = 1;
  while ((i < 0 ? -i : i) > half) {
    ++m;
    pow *= 3;
    half = (pow - 1) / 2;
  }
  return m;
}

TEST(BalancedTernary, ExhaustiveRoundTripAndLength) {
  for (std::int64_t i = -3281; i <= 3281; ++i) {
    const auto d = to_balanced_ternary(i);
    ASSERT_TRUE(d.is_canonical());
    ASSERT_EQ(from_balanced_ternary(d), i);
    ASSERT_EQ(d.size(), digit_count(i)) << i;
  }
}

TEST(BalancedTernary, SampledRoundTrip) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  for (int k = 0; k < 20000; ++k) {
    const std::int64_t i = dist(rng);
    EXPECT_EQ(from_balanced_ternary(to_balanced_ternary(i)), i);
  }
  for (std::int64_t i : {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()})
    EXPECT_EQ(from_balanced_ternary(to_balanced_ternary(i)), i);
}

TEST(SymbolAtInfinite, Examples) {
  EXPECT_EQ(symbol_at_infinite(0), kTwo);
  EXPECT_EQ(symbol_at_infinite(1), kThree);
  EXPECT_EQ(symbol_at_infinite(-1), kOne);
  EXPECT_EQ(symbol_at_infinite(-13), kOne);
}

TEST(SymbolAtInfinite, WorkedCompositionOrder) {
  // 4 = [1, 1]: the last symbol of 213123132.
  ASSERT_EQ(to_balanced_ternary(4).digits(), (Digits{1, 1}));
  EXPECT_EQ(symbol_at_infinite(4), kTwo);
  EXPECT_EQ(RHO(RHO(kTwo)), kTwo);
  // -2 = [-1, 1] separates the two composition orders: sigma(rho(2)) = 3,
  // while rho(sigma(2)) = 1. The word 213123132 has 3 at offset 2.
  ASSERT_EQ(to_balanced_ternary(-2).digits(), (Digits{-1, 1}));
  EXPECT_EQ(symbol_at_infinite(-2), kThree);
  EXPECT_EQ(symbol_at(2, -2), kThree);
}

TEST(SymbolAtInfinite, AgreesWithGenerationAtLevelSeven) {
  const TernaryWord w = generate(7);
  const std::int64_t h = half_width(7);
  for (std::int64_t i = -h; i <= h; ++i) ASSERT_EQ(symbol_at_infinite(i), w[static_cast<std::size_t>(i + h)]) << i;
}

TEST(SymbolAtInfinite, LeadingZerosAreInert) {
  for (std::int64_t i = -500; i <= 500; ++i) {
    const BalancedTernaryDigits digits = to_balanced_ternary(i);
    Digits padded(3, 0);
    padded.insert(padded.end(), digits.digits().begin(), digits.digits().end());
    EXPECT_EQ(symbol_from_digits(BalancedTernaryDigits(padded)), symbol_at_infinite(i));
  }
}

TEST(SymbolAtInfinite, LargeIndicesStayInAlphabet) {
  for (std::int64_t i : {std::int64_t{1} << 40, -(std::int64_t{1} << 50), std::numeric_limits<std::int64_t>::min()}) {
    const int v = symbol_at_infinite(i).value();
    EXPECT_TRUE(v >= 1 && v <= 3);
  }
}

TEST(Automaton, TableShape) {
  const AutomatonTable& t = automaton_table();
  EXPECT_EQ(t.states.size(), 6u);
  EXPECT_EQ(t.states[AutomatonTable::kStart], Permutation3::identity());
  EXPECT_EQ(t.transition(AutomatonTable::kStart, 0), AutomatonTable::kStart);
  const std::size_t rho_state = t.transition(AutomatonTable::kStart, 1);
  EXPECT_EQ(t.states[rho_state], RHO);
  EXPECT_EQ(t.output[rho_state], kThree);
  EXPECT_THROW(t.transition(0, 2), std::invalid_argument);
}

TEST(Automaton, TotalDeterministicAndClosed) {
  const AutomatonTable& t = automaton_table();
  std::set<std::string> distinct;
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    distinct.insert(t.states[k].to_string());
    EXPECT_EQ(t.output[k], t.states[k](kTwo));
    for (int d = -1; d <= 1; ++d) {
      const std::size_t next = t.transition(k, d);
      ASSERT_LT(next, t.states.size());
      EXPECT_EQ(t.states[next], t.states[k] * digit_permutation(d));
    }
    EXPECT_EQ(t.transition(k, 0), k);
  }
  EXPECT_EQ(distinct.size(), t.states.size());
  EXPECT_EQ(&automaton_table(), &t);
}

TEST(Automaton, ClosureIsAllOfS3) {
  // Independent closure: words over {SIGMA, RHO} up to length 5.
  std::set<std::string> seen{Permutation3::identity().to_string()};
  std::vector<Permutation3> frontier{Permutation3::identity()};
  for (int depth = 0; depth < 5; ++depth) {
    std::vector<Permutation3> next;
    for (const auto& p : frontier)
      for (const auto& g : {SIGMA, RHO}) {
        const Permutation3 q = p * g;
        if (seen.insert(q.to_string()).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(automaton_table().states.size(), seen.size());
}

}  // namespace
}  // namespace powerfree
