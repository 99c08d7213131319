#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace erdos_straus {

/// Arbitrary-precision signed integer. All public quantities use it;
/// machine-word fast paths stay internal.
using BigInt = mpz_class;

/// Greatest common divisor of two nonnegative integers.
/// Throws DomainError when both are zero or either is negative.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Least common multiple of two positive integers.
BigInt lcm(const BigInt& a, const BigInt& b);

/// Inverse of `a` modulo `m` in [1, m), computed with the extended
/// Euclidean algorithm. Absent when gcd(a mod m, m) != 1.
/// Throws DomainError when m < 2.
std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& m);

/// Least nonnegative residue of `a` modulo `m` (m >= 1).
BigInt mod_floor(const BigInt& a, const BigInt& m);

/// Nonnegative fraction always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class ExactRational {
 public:
  ExactRational() : num_(0), den_(1) {}

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend ExactRational reduce(const BigInt& num, const BigInt& den);

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a,
                                          const ExactRational& b);

  std::string to_string() const;

 private:
  ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

/// Builds num/den in lowest terms. Throws DomainError when den <= 0 or num < 0.
ExactRational reduce(const BigInt& num, const BigInt& den);

/// True iff the reduced numerator is 1. Throws DomainError for zero.
bool is_unit_fraction(const ExactRational& r);

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

/// Parses a base-10 nonnegative integer; throws DomainError on malformed text.
BigInt parse_integer(const std::string& text);

/// Converts to uint64_t when it fits.
std::optional<std::uint64_t> to_u64(const BigInt& v);

}  // namespace erdos_straus
