#pragma once

#include <cstdint>
#include <vector>

#include "erdos_straus/exact.hpp"

namespace erdos_straus {

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

/// Prime factorization by trial division, primes ascending. n >= 1.
/// Intended for desk-scale inputs (the oracle's denominators).
std::vector<PrimePower> factorize(const BigInt& n);

/// Primality test. Exact below 2^64 (GMP's BPSW plus Miller-Rabin rounds);
/// probabilistic with error below 4^-30 above that.
bool is_prime(const BigInt& n);

}  // namespace erdos_straus
