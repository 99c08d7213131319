#include <gtest/gtest.h>

#include "erdos_straus/sieve.hpp"
#include "reference.hpp"

using namespace erdos_straus;

TEST(Sieve, SmallLimits) {
  EXPECT_EQ(sieve_primes(30), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(sieve_primes(2), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(sieve_primes(3), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(sieve_primes(1).empty());
  EXPECT_TRUE(sieve_primes(0).empty());
}

TEST(Sieve, MatchesTrialDivision) {
  for (std::uint64_t limit : {4u, 9u, 25u, 97u, 100u, 1000u, 7919u, 30000u}) {
    ASSERT_EQ(sieve_primes(limit), reference::trial_primes(limit)) << limit;
  }
}

TEST(Sieve, PrimeCountAt1e6) {
  const auto primes = sieve_primes(1'000'000);
  EXPECT_EQ(primes.size(), 78498u);
  EXPECT_EQ(primes.back(), 999983u);
  // Spot checks by trial division, including across segment seams.
  for (std::size_t i = 0; i < primes.size(); i += 997) {
    ASSERT_TRUE(reference::trial_is_prime(primes[i])) << primes[i];
  }
}

TEST(Sieve, SegmentedWindowMatchesFullSieve) {
  const auto all = sieve_primes(2'000'000);
  std::vector<std::uint64_t> window;
  for_each_prime(999'000, 1'600'000, [&](std::uint64_t p) { window.push_back(p); });
  std::vector<std::uint64_t> expected;
  for (auto p : all) {
    if (p >= 999'000 && p <= 1'600'000) expected.push_back(p);
  }
  EXPECT_EQ(window, expected);

  std::vector<std::uint64_t> tiny;
  for_each_prime(14, 16, [&](std::uint64_t p) { tiny.push_back(p); });
  EXPECT_TRUE(tiny.empty());
  for_each_prime(2, 2, [&](std::uint64_t p) { tiny.push_back(p); });
  EXPECT_EQ(tiny, (std::vector<std::uint64_t>{2}));
}
