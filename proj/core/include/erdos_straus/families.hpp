#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "erdos_straus/exact.hpp"
#include "erdos_straus/triple.hpp"

namespace erdos_straus {

/// One parameterized solution family. With q = 4k+3 the split parameter
/// satisfies 1 <= l <= 2q and gcd(l, q) = 1.
class FamilyParams {
 public:
  /// Throws DomainError when (k, l) breaks the constraints above.
  FamilyParams(SolutionKind kind, std::uint64_t k, std::uint64_t l);

  SolutionKind kind() const { return kind_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t l() const { return l_; }

  /// 4k + 3.
  BigInt q() const;
  /// 4q - l, the partner numerator of l.
  BigInt partner() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

  std::string to_string() const;

 private:
  SolutionKind kind_;
  std::uint64_t k_;
  std::uint64_t l_;
};

/// Congruence class {r + jM}. 0 <= residue < modulus.
struct ResidueClass {
  BigInt modulus;
  BigInt residue;

  /// Throws DomainError unless modulus >= 1 and 0 <= residue < modulus.
  static ResidueClass make(BigInt modulus, BigInt residue);

  bool contains(const BigInt& n) const;

  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.modulus == b.modulus && a.residue == b.residue;
  }
  std::string to_string() const;
};

/// M = (16 l q - 4 l^2) / gcd(l, 4)^2.
BigInt modulus(std::uint64_t k, std::uint64_t l);

/// The n in [0, M) with q n ≡ -1 (mod M).
BigInt type1_residue(std::uint64_t k, std::uint64_t l);

/// -q mod M.
BigInt type2_residue(std::uint64_t k, std::uint64_t l);

/// Residue class a family applies to.
ResidueClass residue_class(const FamilyParams& f);

/// All families with k <= k_max, ordered by k, then l, Type I before Type II.
std::vector<FamilyParams> enumerate_params(std::uint64_t k_max);

/// Unsorted (x, y, z) exactly as the family writes its three terms.
/// Throws PreconditionError when p is outside the family's class and
/// FamilyInapplicableError when any division is not exact.
std::array<BigInt, 3> construct_raw(const BigInt& p, const FamilyParams& f);

/// With D = qp + 1: (D/(4q-l), D/l, pD/4), verified and normalized.
EsTriple construct_type1(const BigInt& p, std::uint64_t k, std::uint64_t l);

/// With S = p + q: (S/4, pS/(4q-l), pS/l), verified and normalized.
EsTriple construct_type2(const BigInt& p, std::uint64_t k, std::uint64_t l);

/// Dispatches on f.kind().
EsTriple construct(const BigInt& p, const FamilyParams& f);

/// Families up to k_max whose residue class contains p. p ≡ 1 (mod 4),
/// DomainError otherwise.
std::vector<FamilyParams> applicable_families(const BigInt& p, std::uint64_t k_max);

/// Precomputed families and classes for a fixed k_max, for callers that
/// query many primes.
class FamilyTable {
 public:
  struct Entry {
    FamilyParams family;
    ResidueClass cls;
  };

  explicit FamilyTable(std::uint64_t k_max);

  std::uint64_t k_max() const { return k_max_; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<FamilyParams> applicable(const BigInt& p) const;

 private:
  std::uint64_t k_max_;
  std::vector<Entry> entries_;
};

}  // namespace erdos_straus
