#pragma once

#include <optional>
#include <vector>

#include "erdos_straus/exact.hpp"
#include "erdos_straus/triple.hpp"

namespace erdos_straus {

/// Every decomposition 4/n = 1/x + 1/y + 1/z with x <= y <= z, sorted
/// lexicographically. x ranges over (n/4, 3n/4]; for each x the remaining
/// 1/y + 1/z = a/b is solved through the divisors d <= b of b^2 with
/// d ≡ -b (mod a), which are exactly the y in [max(x, floor(b/a)+1), floor(2b/a)]
/// that leave a unit fraction. n >= 1.
std::vector<EsTriple> enumerate_all(const BigInt& n);

/// Decompositions with the given smallest denominator, sorted by y.
std::vector<EsTriple> enumerate_with_x(const BigInt& n, const BigInt& x);

/// Lexicographically first decomposition, or absent when none exists.
/// Stops at the first x that admits a solution.
std::optional<EsTriple> first_solution(const BigInt& n);

struct TypeCounts {
  std::size_t type_i = 0;
  std::size_t type_ii = 0;
};

/// Oracle solutions of 4/p partitioned by classify. p an odd prime.
TypeCounts count_by_type(const BigInt& p);

}  // namespace erdos_straus
