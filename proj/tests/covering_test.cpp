#include <gtest/gtest.h>

#include <set>

#include "erdos_straus/covering.hpp"
#include "erdos_straus/errors.hpp"
#include "erdos_straus/sieve.hpp"

using namespace erdos_straus;

namespace {

ResidueClass rc(long m, long r) { return ResidueClass::make(m, r); }

std::set<std::pair<long, long>> pairs(const ClassSet& set) {
  std::set<std::pair<long, long>> out;
  for (const auto& e : set) out.emplace(e.cls.modulus.get_si(), e.cls.residue.get_si());
  return out;
}

}  // namespace

TEST(ClassesFor, KZero) {
  const auto set = classes_for(0);
  ASSERT_EQ(set.size(), 7u);
  EXPECT_EQ(pairs(set), (std::set<std::pair<long, long>>{
                            {44, 29}, {44, 41}, {20, 13}, {20, 17}, {8, 5}, {140, 93}, {140, 137}}));
  // 5 mod 8 comes from both kinds with l = 4.
  for (const auto& e : set) {
    if (e.cls == rc(8, 5)) {
      ASSERT_EQ(e.provenance.size(), 2u);
      EXPECT_EQ(e.provenance[0], FamilyParams(SolutionKind::TypeI, 0, 4));
      EXPECT_EQ(e.provenance[1], FamilyParams(SolutionKind::TypeII, 0, 4));
    } else {
      EXPECT_EQ(e.provenance.size(), 1u);
    }
  }
}

TEST(ClassesFor, MonotoneAndWellFormed) {
  const auto k0 = pairs(classes_for(0));
  const auto k1 = pairs(classes_for(1));
  const auto k2 = pairs(classes_for(2));
  EXPECT_TRUE(std::includes(k1.begin(), k1.end(), k0.begin(), k0.end()));
  EXPECT_TRUE(std::includes(k2.begin(), k2.end(), k1.begin(), k1.end()));
  for (const auto& e : classes_for(3)) {
    EXPECT_EQ(mod_floor(e.cls.modulus, 4), 0);
    EXPECT_EQ(mod_floor(e.cls.residue, 4), 1);
    EXPECT_FALSE(e.provenance.empty());
  }
}

TEST(IsCovered, Examples) {
  const auto k0 = classes_for(0);
  EXPECT_TRUE(is_covered(29, k0));
  EXPECT_FALSE(is_covered(89, k0));
  EXPECT_FALSE(is_covered(241, k0));
  EXPECT_THROW(is_covered(7, k0), DomainError);
}

TEST(UncoveredPrimes, Examples) {
  const auto k0 = classes_for(0);
  EXPECT_EQ(uncovered_primes(250, k0), (std::vector<std::uint64_t>{89, 241}));
  EXPECT_TRUE(uncovered_primes(80, k0).empty());
  EXPECT_TRUE(uncovered_primes(250, make_class_set({rc(4, 1)})).empty());
  EXPECT_THROW(uncovered_primes(4, k0), DomainError);
}

TEST(UncoveredPrimes, EveryReportedPrimeIsGenuinelyUncovered) {
  const auto k1 = classes_for(1);
  const auto gaps = uncovered_primes(50'000, k1);
  std::set<std::uint64_t> gap_set(gaps.begin(), gaps.end());
  for (auto p : sieve_primes(50'000)) {
    if (p % 4 != 1) continue;
    ASSERT_EQ(gap_set.count(p) == 1, !is_covered(BigInt(p), k1)) << p;
  }
}

TEST(GapWitness, Examples) {
  EXPECT_EQ(exact_gap_witness(classes_for(0)), rc(3080, 1));
  EXPECT_FALSE(exact_gap_witness(make_class_set({rc(4, 1)})).has_value());
  EXPECT_EQ(exact_gap_witness(make_class_set({rc(8, 5)})), rc(8, 1));
}

TEST(GapWitness, CapacityError) {
  EXPECT_THROW(exact_gap_witness(classes_for(0), 1000), CapacityError);
  EXPECT_THROW(coverage_density(classes_for(1)), CapacityError);
}

TEST(GapWitness, FirstWitnessClassPrimeIsReportedUncovered) {
  const auto k0 = classes_for(0);
  const auto w = exact_gap_witness(k0);
  ASSERT_TRUE(w.has_value());
  const auto gaps = uncovered_primes(20'000, k0);
  std::uint64_t first = 0;
  for (auto p : sieve_primes(20'000)) {
    if (w->contains(BigInt(p))) {
      first = p;
      break;
    }
  }
  EXPECT_EQ(first, 9241u);
  EXPECT_NE(std::find(gaps.begin(), gaps.end(), first), gaps.end());
}

TEST(CoverageDensity, Examples) {
  EXPECT_EQ(coverage_density(make_class_set({rc(4, 1)})), reduce(1, 1));
  EXPECT_EQ(coverage_density(make_class_set({rc(8, 5)})), reduce(1, 2));
  EXPECT_EQ(coverage_density(make_class_set({rc(8, 1), rc(8, 5)})), reduce(1, 1));
  // 384 of the 480 admissible residues mod 3080.
  EXPECT_EQ(coverage_density(classes_for(0)), reduce(4, 5));
}

TEST(CoverageDensity, ModuliNotDivisibleByFour) {
  // lcm(4, 3) = 12; admissible residues {1, 5}; 1 ≡ 1 (mod 3) is covered, 5 is not.
  const auto set = make_class_set({rc(3, 1)});
  EXPECT_EQ(coverage_density(set), reduce(1, 2));
  EXPECT_EQ(exact_gap_witness(set), rc(12, 5));
}

TEST(CoverageDensity, FullIffNoWitness) {
  const std::vector<ClassSet> sets{
      make_class_set({rc(8, 1), rc(8, 5)}),
      make_class_set({rc(8, 5), rc(16, 1), rc(16, 9)}),
      make_class_set({rc(8, 5), rc(16, 1)}),
      make_class_set({rc(12, 1), rc(12, 5)}),  // 9 mod 12 shares 3 with the lcm
      make_class_set({rc(20, 1), rc(20, 9), rc(20, 13), rc(20, 17)}),
      classes_for(0),
  };
  for (const auto& set : sets) {
    const bool full = coverage_density(set) == reduce(1, 1);
    ASSERT_EQ(full, !exact_gap_witness(set).has_value());
  }
}

TEST(CoverageDensity, SyntheticFullCoverLeavesNoUncoveredPrimes) {
  // 5 mod 8 and 1 mod 8 split into 1, 9 mod 16: every prime ≡ 1 (mod 4).
  const auto set = make_class_set({rc(8, 5), rc(16, 1), rc(16, 9)});
  ASSERT_FALSE(exact_gap_witness(set).has_value());
  EXPECT_TRUE(uncovered_primes(100'000, set).empty());
}

TEST(Density, EmpiricalMatchesUncoveredCount) {
  const auto k0 = classes_for(0);
  const auto gaps = uncovered_primes(10'000, k0);
  std::uint64_t total = 0;
  for (auto p : sieve_primes(10'000)) total += (p % 4 == 1);
  EXPECT_EQ(empirical_density(10'000, k0),
            reduce(BigInt(total - gaps.size()), BigInt(total)));
}

TEST(AnalyzeCoverage, ExactAndEmpiricalModes) {
  const auto r0 = analyze_coverage(0, 250);
  EXPECT_EQ(r0.density_method, DensityMethod::Exact);
  EXPECT_EQ(r0.uncovered_primes, (std::vector<std::uint64_t>{89, 241}));
  EXPECT_EQ(r0.witness, rc(3080, 1));
  EXPECT_EQ(r0.lcm, 3080);
  EXPECT_EQ(r0.density, reduce(4, 5));

  const auto r1 = analyze_coverage(1, 10'000);
  EXPECT_EQ(r1.density_method, DensityMethod::Empirical);
  EXPECT_FALSE(r1.witness.has_value());
  EXPECT_GT(r1.lcm, BigInt(kDefaultLcmBound));
  EXPECT_LE(r1.density, reduce(1, 1));
}
