#include "erdos_straus/factor.hpp"

#include "erdos_straus/errors.hpp"

namespace erdos_straus {

namespace {

void factor_u64(std::uint64_t m, std::vector<PrimePower>& out) {
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e != 0) out.push_back({BigInt(static_cast<unsigned long>(p)), e});
  };
  take(2);
  take(3);
  // 6j ± 1 wheel.
  for (std::uint64_t p = 5; p <= m / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (m > 1) out.push_back({BigInt(static_cast<unsigned long>(m)), 1});
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n < 1) throw DomainError("factorize: argument must be positive");
  std::vector<PrimePower> out;
  if (auto small = to_u64(n)) {
    factor_u64(*small, out);
    return out;
  }
  BigInt m = n;
  BigInt p = 2;
  while (p * p <= m) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e != 0) out.push_back({p, e});
    p += (p == 2) ? 1 : 2;
    if (auto rest = to_u64(m)) {
      std::vector<PrimePower> tail;
      factor_u64(*rest, tail);
      // factor_u64 restarts at 2, but every prime below p is already gone.
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

}  // namespace erdos_straus
