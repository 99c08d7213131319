#include <gtest/gtest.h>

#include "erdos_straus/errors.hpp"
#include "erdos_straus/oracle.hpp"
#include "erdos_straus/sieve.hpp"
#include "erdos_straus/solver.hpp"

using namespace erdos_straus;

TEST(SolveAny, Examples) {
  const auto two = solve_any(2, 3);
  EXPECT_EQ(two.triple, EsTriple(1, 2, 2));
  EXPECT_EQ(two.strategy, Strategy::SpecialCase);
  EXPECT_STREQ(to_string(two.strategy), "special-case");

  const auto seven = solve_any(7, 3);
  EXPECT_EQ(seven.triple, EsTriple(2, 15, 210));
  EXPECT_STREQ(to_string(seven.strategy), "greedy-3mod4");

  const auto s89 = solve_any(89, 0);
  EXPECT_EQ(s89.triple, EsTriple(23, 690, 61410));
  EXPECT_STREQ(to_string(s89.strategy), "oracle-fallback");
  EXPECT_FALSE(s89.family.has_value());

  const auto s29 = solve_any(29, 3);
  EXPECT_EQ(s29.strategy, Strategy::Family);
  EXPECT_EQ(s29.family, FamilyParams(SolutionKind::TypeI, 0, 1));
  EXPECT_EQ(s29.triple, EsTriple(8, 88, 638));
}

TEST(SolveAny, Errors) {
  EXPECT_THROW(solve_any(1, 3), DomainError);
  EXPECT_THROW(solve_any(0, 3), DomainError);
  EXPECT_THROW(solve_any(15, 3), CompositeInputError);
  EXPECT_THROW(solve_any(1, 3), DomainError);
}

TEST(SolveAny, DeterministicAndAlwaysVerified) {
  const Solver a(2);
  const Solver b(2);
  for (auto p : sieve_primes(20'000)) {
    const BigInt bp(p);
    const auto s = a.solve(bp);
    ASSERT_TRUE(verify_triple(bp, s.triple)) << p;
    ASSERT_EQ(s, b.solve(bp)) << p;
    ASSERT_EQ(s.family.has_value(), s.strategy == Strategy::Family);
  }
}

TEST(SolveAny, FallbackMatchesOracleFront) {
  const Solver solver(0);
  for (auto p : sieve_primes(3000)) {
    const BigInt bp(p);
    const auto s = solver.solve(bp);
    if (s.strategy == Strategy::OracleFallback) ASSERT_EQ(s.triple, enumerate_all(bp).front());
  }
}

TEST(Strategy, NamesRoundTrip) {
  for (std::size_t i = 0; i < kStrategyCount; ++i) {
    const auto s = static_cast<Strategy>(i);
    EXPECT_EQ(strategy_from_string(to_string(s)), s);
  }
  EXPECT_FALSE(strategy_from_string("nope").has_value());
}

TEST(Scan, IndependentOfWorkerCount) {
  const auto one = scan({50'000, 3, 1});
  const auto four = scan({50'000, 3, 4});
  EXPECT_EQ(one.primes_checked, 5133u);
  EXPECT_EQ(one.primes_checked, four.primes_checked);
  EXPECT_EQ(one.by_strategy, four.by_strategy);
  EXPECT_TRUE(one.clean());
  EXPECT_TRUE(four.clean());
  std::uint64_t total = 0;
  for (auto c : one.by_strategy) total += c;
  EXPECT_EQ(total, one.primes_checked);
  EXPECT_EQ(one.by_strategy[static_cast<std::size_t>(Strategy::SpecialCase)], 1u);
}
