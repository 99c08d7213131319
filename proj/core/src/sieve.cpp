#include "erdos_straus/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace erdos_straus {

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 18;  // odd numbers per segment

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes up to `limit` by a plain sieve; used to seed the segments.
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 3) return out;
  std::vector<bool> composite(limit / 2 + 1, false);  // index i is 2i+1
  for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  return out;
}

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
  if (hi < 2 || lo > hi) return;
  if (lo <= 2) fn(2);
  const std::uint64_t seeds_limit = isqrt(hi);
  const auto seeds = small_odd_primes(seeds_limit);

  // Segment covers odd numbers [start, start + 2*span).
  std::uint64_t start = std::max<std::uint64_t>(lo, 3) | 1;
  std::vector<char> composite(kSegmentSpan);
  while (start <= hi) {
    const std::uint64_t span = std::min(kSegmentSpan, (hi - start) / 2 + 1);
    const std::uint64_t end = start + 2 * (span - 1);  // last odd candidate, inclusive
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(span), 0);
    for (std::uint64_t p : seeds) {
      if (p * p > end) break;
      std::uint64_t m = std::max(p * p, (start + p - 1) / p * p);
      if (m % 2 == 0) m += p;
      for (; m <= end; m += 2 * p) composite[(m - start) / 2] = 1;
    }
    for (std::uint64_t i = 0; i < span; ++i) {
      const std::uint64_t n = start + 2 * i;
      if (!composite[i] && n > 1) fn(n);
    }
    if (end >= hi || end > UINT64_MAX - 2) break;
    start = end + 2;
  }
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (limit > 100) {
    const double estimate = 1.3 * static_cast<double>(limit) / std::log(static_cast<double>(limit));
    out.reserve(static_cast<std::size_t>(estimate));
  }
  for_each_prime(2, limit, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

}  // namespace erdos_straus
