#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "erdos_straus/exact.hpp"
#include "erdos_straus/families.hpp"
#include "erdos_straus/triple.hpp"

namespace erdos_straus {

enum class Strategy { SpecialCase, Greedy, Family, OracleFallback };

inline constexpr std::size_t kStrategyCount = 4;

/// "special-case", "greedy-3mod4", "family", "oracle-fallback".
const char* to_string(Strategy s);
std::optional<Strategy> strategy_from_string(const std::string& s);

struct Solution {
  BigInt n;
  EsTriple triple;
  Strategy strategy;
  /// Set iff strategy == Family.
  std::optional<FamilyParams> family;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Runs the fixed strategy order for one k_max: p = 2, then the greedy
/// identity for p ≡ 3 (mod 4), then applicable families in order, then the
/// oracle's lexicographically first triple.
class Solver {
 public:
  explicit Solver(std::uint64_t k_max);

  /// Throws DomainError for n < 2, CompositeInputError for composite n and
  /// CounterexampleAlert when nothing decomposes 4/n. The returned triple
  /// always passes verify_triple.
  Solution solve(const BigInt& n) const;

  std::uint64_t k_max() const { return table_.k_max(); }

 private:
  FamilyTable table_;
};

Solution solve_any(const BigInt& n, std::uint64_t k_max);

struct ScanOptions {
  std::uint64_t limit = 0;
  std::uint64_t k_max = 3;
  unsigned workers = 1;
};

struct ScanSummary {
  std::uint64_t limit = 0;
  std::uint64_t k_max = 0;
  std::uint64_t primes_checked = 0;
  /// Indexed by Strategy.
  std::array<std::uint64_t, kStrategyCount> by_strategy{};
  /// Primes with no decomposition at all. Expected empty.
  std::vector<std::uint64_t> alarms;
  /// Any other error raised while solving, one line per prime.
  std::vector<std::string> failures;

  bool clean() const { return alarms.empty() && failures.empty(); }
};

/// Solves and verifies every prime <= limit, partitioning the primes across
/// `workers` threads. Result is independent of the worker count.
ScanSummary scan(const ScanOptions& options);

}  // namespace erdos_straus
