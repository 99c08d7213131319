#include "erdos_straus/exact.hpp"

#include <limits>
#include <utility>

#include "erdos_straus/errors.hpp"

namespace erdos_straus {

BigInt gcd(const BigInt& a, const BigInt& b) {
  if (a < 0 || b < 0) throw DomainError("gcd: operands must be nonnegative");
  if (a == 0 && b == 0) throw DomainError("gcd(0, 0) is undefined");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a <= 0 || b <= 0) throw DomainError("lcm: operands must be positive");
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw DomainError("mod_floor: modulus must be positive");
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& m) {
  if (m < 2) throw DomainError("mod_inverse: modulus must be at least 2");

  // Invariant: old_r ≡ old_s * a and r ≡ s * a (mod m).
  BigInt old_r = mod_floor(a, m);
  BigInt r = m;
  BigInt old_s = 1;
  BigInt s = 0;
  while (r != 0) {
    BigInt quotient = old_r / r;
    BigInt next_r = old_r - quotient * r;
    old_r = std::exchange(r, std::move(next_r));
    BigInt next_s = old_s - quotient * s;
    old_s = std::exchange(s, std::move(next_s));
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

ExactRational reduce(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw DomainError("reduce: denominator must be positive");
  if (num < 0) throw DomainError("reduce: numerator must be nonnegative");
  if (num == 0) return ExactRational{BigInt(0), BigInt(1)};
  BigInt g = gcd(num, den);
  return ExactRational{num / g, den / g};
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactRational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

bool is_unit_fraction(const ExactRational& r) {
  if (r.is_zero()) throw DomainError("is_unit_fraction: zero is not a unit fraction candidate");
  return r.numerator() == 1;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
  return os << r.to_string();
}

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw DomainError("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') throw DomainError("malformed integer literal: " + text);
  }
  return BigInt(text, 10);
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (v < 0) return std::nullopt;
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace erdos_straus
