#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "erdos_straus/exact.hpp"

namespace erdos_straus {

/// Positive triple (x, y, z) standing for 1/x + 1/y + 1/z, always kept in
/// canonical order x <= y <= z. Equal entries are allowed.
class EsTriple {
 public:
  /// Sorts the entries. Throws DomainError if any entry is not positive.
  EsTriple(BigInt a, BigInt b, BigInt c);

  const BigInt& x() const { return v_[0]; }
  const BigInt& y() const { return v_[1]; }
  const BigInt& z() const { return v_[2]; }
  const std::array<BigInt, 3>& values() const { return v_; }

  friend bool operator==(const EsTriple& a, const EsTriple& b) { return a.v_ == b.v_; }
  /// Lexicographic on (x, y, z).
  friend bool operator<(const EsTriple& a, const EsTriple& b);

  std::string to_string() const;

 private:
  std::array<BigInt, 3> v_;
};

std::ostream& operator<<(std::ostream& os, const EsTriple& t);

enum class SolutionKind { TypeI, TypeII };

/// "I" or "II".
const char* to_string(SolutionKind kind);

/// 4xyz == n(xy + yz + zx), evaluated exactly. n >= 1.
bool verify_triple(const BigInt& n, const EsTriple& t);

/// TypeII iff p | y. The triple must decompose 4/p (ContractError otherwise)
/// and must satisfy p ∤ x, p | z (StructuralAnomalyError otherwise).
/// p must be an odd prime (DomainError otherwise).
SolutionKind classify(const BigInt& p, const EsTriple& t);

/// The lone decomposition of 4/2.
EsTriple special_case_two();

/// 1/n = 1/(n+1) + 1/(n(n+1)). n >= 1.
std::pair<BigInt, BigInt> split_unit(const BigInt& n);

/// Greedy step 4/p = 1/a + 1/b with a = (p+1)/4, b = p(p+1)/4, then b is
/// split into b+1 and b(b+1). Throws DomainError unless p ≡ 3 (mod 4).
EsTriple greedy_three_mod_four(const BigInt& p);

/// k with z = ((4k+3)p^2 + p)/4, if z has that shape.
std::optional<BigInt> prop1_k(const BigInt& p, const EsTriple& t);

/// k with x = (p + 4k + 3)/4, if x has that shape.
std::optional<BigInt> prop2_k(const BigInt& p, const EsTriple& t);

/// Both z * gcd(xy, x+y) == xyp and 4xy - (x+y)p == gcd(xy, x+y).
bool z_relation_holds(const BigInt& p, const EsTriple& t);

}  // namespace erdos_straus
