#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace erdos_straus {

/// Primes <= limit, ascending. Segmented odd-only sieve of Eratosthenes;
/// empty when limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Calls `fn` with every prime in [lo, hi], ascending, one segment at a time.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

}  // namespace erdos_straus
