#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "erdos_straus/exact.hpp"
#include "erdos_straus/families.hpp"

namespace erdos_straus {

/// Default ceiling on the lcm for exact residue enumeration.
inline constexpr std::uint64_t kDefaultLcmBound = 100'000'000;

/// A distinct residue class plus every family that produced it.
struct ClassEntry {
  ResidueClass cls;
  std::vector<FamilyParams> provenance;
};

using ClassSet = std::vector<ClassEntry>;

/// Classes of every family with k <= k_max, deduplicated on (M, r) in
/// first-appearance order; provenance lists are merged.
ClassSet classes_for(std::uint64_t k_max);

/// Wraps bare classes (no provenance), deduplicating on (M, r).
ClassSet make_class_set(const std::vector<ResidueClass>& classes);

/// True iff p lies in some class. p ≡ 1 (mod 4), DomainError otherwise.
bool is_covered(const BigInt& p, const ClassSet& classes);

/// Primes p <= limit with p ≡ 1 (mod 4) that lie in no class, ascending.
/// DomainError when limit < 5.
std::vector<std::uint64_t> uncovered_primes(std::uint64_t limit, const ClassSet& classes);

/// lcm(4, every class modulus). The factor 4 makes "r ≡ 1 (mod 4)"
/// meaningful for residues mod the result.
BigInt classes_lcm(const ClassSet& classes);

/// Exact count over residues r mod L with r ≡ 1 (mod 4) and gcd(r, L) = 1.
struct ResidueCensus {
  std::uint64_t lcm = 0;
  std::uint64_t admissible = 0;
  std::uint64_t covered = 0;
  /// Smallest admissible residue in no class.
  std::optional<std::uint64_t> first_gap;
};

/// Throws CapacityError when the lcm exceeds lcm_bound.
ResidueCensus residue_census(const ClassSet& classes,
                             std::uint64_t lcm_bound = kDefaultLcmBound);

/// (L, r) for the smallest uncovered admissible residue r mod L; absent when
/// the classes cover every admissible residue. By Dirichlet the witness class
/// holds infinitely many primes. CapacityError as residue_census.
std::optional<ResidueClass> exact_gap_witness(const ClassSet& classes,
                                              std::uint64_t lcm_bound = kDefaultLcmBound);

/// covered / admissible from residue_census. CapacityError as residue_census.
ExactRational coverage_density(const ClassSet& classes,
                               std::uint64_t lcm_bound = kDefaultLcmBound);

/// Covered share of the primes p ≡ 1 (mod 4) with p <= limit.
ExactRational empirical_density(std::uint64_t limit, const ClassSet& classes);

enum class DensityMethod { Exact, Empirical };

const char* to_string(DensityMethod method);

struct CoverageReport {
  std::uint64_t k_max = 0;
  ClassSet classes;
  std::uint64_t scan_limit = 0;
  std::uint64_t lcm_bound = kDefaultLcmBound;
  std::vector<std::uint64_t> uncovered_primes;
  /// lcm(4, moduli); always computed, even above the bound.
  BigInt lcm;
  /// Only meaningful when density_method == Exact.
  std::optional<ResidueClass> witness;
  ExactRational density;
  DensityMethod density_method = DensityMethod::Exact;
};

/// Sieve scan up to scan_limit plus exact lcm analysis when the lcm is
/// within lcm_bound; otherwise the density falls back to the empirical ratio
/// over the scanned primes and no witness is searched.
CoverageReport analyze_coverage(std::uint64_t k_max, std::uint64_t scan_limit,
                                std::uint64_t lcm_bound = kDefaultLcmBound);

}  // namespace erdos_straus
