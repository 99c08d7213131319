#include "erdos_straus/oracle.hpp"

#include <algorithm>
#include <map>

#include "erdos_straus/errors.hpp"
#include "erdos_straus/factor.hpp"

namespace erdos_straus {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 to_u128(const BigInt& v) { return static_cast<u128>(*to_u64(v)); }

BigInt from_u128(u128 v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

// Divisors of the number with the given factorization that do not exceed
// `limit`, unordered.
template <class T>
void collect_divisors(const std::vector<std::pair<T, unsigned>>& factors, std::size_t index,
                      const T& current, const T& limit, std::vector<T>& out) {
  if (index == factors.size()) {
    out.push_back(current);
    return;
  }
  const auto& [prime, exponent] = factors[index];
  T value = current;
  for (unsigned e = 0;; ++e) {
    collect_divisors(factors, index + 1, value, limit, out);
    if (e == exponent) break;
    // value * prime <= limit, phrased to avoid overflowing T.
    if (value > limit / prime) break;
    value *= prime;
  }
}

// Solutions of 1/y + 1/z = a/b (gcd(a, b) = 1) with x <= y <= z, ascending y.
// (ay - b)(az - b) = b^2, so y = (b + d)/a for divisors d <= b of b^2.
template <class T>
void solve_pair(const T& a, const T& b, const T& x,
                const std::vector<std::pair<T, unsigned>>& b_squared_factors,
                std::vector<std::pair<T, T>>& out) {
  std::vector<T> divisors;
  collect_divisors<T>(b_squared_factors, 0, T(1), b, divisors);
  std::sort(divisors.begin(), divisors.end());
  const T b2 = b * b;
  for (const T& d : divisors) {
    const T y_num = b + d;
    if (y_num % a != 0) continue;
    const T y = y_num / a;
    if (y < x) continue;
    const T z_num = b + b2 / d;
    if (z_num % a != 0) continue;
    out.emplace_back(y, T(z_num / a));
  }
}

class Enumerator {
 public:
  explicit Enumerator(BigInt n) : n_(std::move(n)) {
    if (n_ < 1) throw DomainError("oracle: n must be positive");
    for (auto& pp : factorize(n_)) n_factors_[pp.prime] += pp.exponent;
  }

  const BigInt& n() const { return n_; }

  BigInt x_begin() const { return BigInt(n_ / 4) + 1; }
  BigInt x_end() const { return BigInt(3 * n_ / 4); }

  std::vector<EsTriple> with_x(const BigInt& x) const {
    std::vector<EsTriple> out;
    const BigInt a_raw = 4 * x - n_;
    if (x < 1 || a_raw <= 0) return out;
    const BigInt b_raw = n_ * x;
    const BigInt g = gcd(a_raw, b_raw);
    const BigInt a = a_raw / g;
    const BigInt b = b_raw / g;

    // Factor b = n x / g from the factors of n and x.
    std::map<BigInt, unsigned> merged = n_factors_;
    for (auto& pp : factorize(x)) merged[pp.prime] += pp.exponent;
    BigInt rest_g = g;
    for (auto& [prime, exponent] : merged) {
      while (exponent > 0 && mpz_divisible_p(rest_g.get_mpz_t(), prime.get_mpz_t())) {
        rest_g /= prime;
        --exponent;
      }
    }
    if (rest_g != 1) throw InternalError("oracle: gcd factor outside n*x");

    if (to_u64(b)) {
      std::vector<std::pair<u128, unsigned>> f;
      for (const auto& [prime, exponent] : merged) {
        if (exponent != 0) f.emplace_back(to_u128(prime), 2 * exponent);
      }
      std::vector<std::pair<u128, u128>> yz;
      solve_pair<u128>(to_u128(a), to_u128(b), to_u128(x), f, yz);
      for (const auto& [y, z] : yz) out.emplace_back(x, from_u128(y), from_u128(z));
    } else {
      std::vector<std::pair<BigInt, unsigned>> f;
      for (const auto& [prime, exponent] : merged) {
        if (exponent != 0) f.emplace_back(prime, 2 * exponent);
      }
      std::vector<std::pair<BigInt, BigInt>> yz;
      solve_pair<BigInt>(a, b, x, f, yz);
      for (auto& [y, z] : yz) out.emplace_back(x, std::move(y), std::move(z));
    }
    return out;
  }

 private:
  BigInt n_;
  std::map<BigInt, unsigned> n_factors_;
};

}  // namespace

std::vector<EsTriple> enumerate_with_x(const BigInt& n, const BigInt& x) {
  return Enumerator(n).with_x(x);
}

std::vector<EsTriple> enumerate_all(const BigInt& n) {
  Enumerator e(n);
  std::vector<EsTriple> out;
  const BigInt end = e.x_end();
  for (BigInt x = e.x_begin(); x <= end; ++x) {
    auto part = e.with_x(x);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::optional<EsTriple> first_solution(const BigInt& n) {
  Enumerator e(n);
  const BigInt end = e.x_end();
  for (BigInt x = e.x_begin(); x <= end; ++x) {
    auto part = e.with_x(x);
    if (!part.empty()) return std::move(part.front());
  }
  return std::nullopt;
}

TypeCounts count_by_type(const BigInt& p) {
  TypeCounts counts;
  for (const auto& t : enumerate_all(p)) {
    if (classify(p, t) == SolutionKind::TypeI) {
      ++counts.type_i;
    } else {
      ++counts.type_ii;
    }
  }
  return counts;
}

}  // namespace erdos_straus
