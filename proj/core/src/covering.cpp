#include "erdos_straus/covering.hpp"

#include <algorithm>

#include "erdos_straus/errors.hpp"
#include "erdos_straus/factor.hpp"
#include "erdos_straus/sieve.hpp"

namespace erdos_straus {

namespace {

void add_class(ClassSet& set, const ResidueClass& cls, const FamilyParams* origin) {
  auto it = std::find_if(set.begin(), set.end(),
                         [&](const ClassEntry& e) { return e.cls == cls; });
  if (it == set.end()) {
    set.push_back({cls, {}});
    it = std::prev(set.end());
  }
  if (origin != nullptr) it->provenance.push_back(*origin);
}

// (modulus, residue) pairs as machine words, for scanning many primes.
struct SmallClass {
  std::uint64_t modulus;
  std::uint64_t residue;
};

std::vector<SmallClass> to_small(const ClassSet& classes) {
  std::vector<SmallClass> out;
  out.reserve(classes.size());
  for (const auto& e : classes) {
    auto m = to_u64(e.cls.modulus);
    auto r = to_u64(e.cls.residue);
    // A modulus beyond 64 bits cannot be hit by a 64-bit prime except at its residue.
    if (!m || !r) {
      throw CapacityError("class modulus " + e.cls.modulus.get_str() +
                          " too large for a machine-word prime scan");
    }
    out.push_back({*m, *r});
  }
  return out;
}

bool covered_small(std::uint64_t p, const std::vector<SmallClass>& classes) {
  return std::any_of(classes.begin(), classes.end(),
                     [p](const SmallClass& c) { return p % c.modulus == c.residue; });
}

}  // namespace

const char* to_string(DensityMethod method) {
  return method == DensityMethod::Exact ? "exact" : "empirical";
}

ClassSet classes_for(std::uint64_t k_max) {
  ClassSet set;
  for (const auto& f : enumerate_params(k_max)) add_class(set, residue_class(f), &f);
  return set;
}

ClassSet make_class_set(const std::vector<ResidueClass>& classes) {
  ClassSet set;
  for (const auto& c : classes) add_class(set, ResidueClass::make(c.modulus, c.residue), nullptr);
  return set;
}

bool is_covered(const BigInt& p, const ClassSet& classes) {
  if (mod_floor(p, 4) != 1) {
    throw DomainError("is_covered: p must be ≡ 1 (mod 4), got " + p.get_str());
  }
  return std::any_of(classes.begin(), classes.end(),
                     [&](const ClassEntry& e) { return e.cls.contains(p); });
}

std::vector<std::uint64_t> uncovered_primes(std::uint64_t limit, const ClassSet& classes) {
  if (limit < 5) throw DomainError("uncovered_primes: limit must be at least 5");
  const auto small = to_small(classes);
  std::vector<std::uint64_t> out;
  for_each_prime(5, limit, [&](std::uint64_t p) {
    if (p % 4 == 1 && !covered_small(p, small)) out.push_back(p);
  });
  return out;
}

BigInt classes_lcm(const ClassSet& classes) {
  BigInt l = 4;
  for (const auto& e : classes) l = lcm(l, e.cls.modulus);
  return l;
}

ResidueCensus residue_census(const ClassSet& classes, std::uint64_t lcm_bound) {
  const BigInt big_l = classes_lcm(classes);
  if (big_l > BigInt(static_cast<unsigned long>(lcm_bound))) {
    throw CapacityError("lcm " + big_l.get_str() + " exceeds bound " +
                        std::to_string(lcm_bound) + "; use the empirical sieve coverage instead");
  }
  const std::uint64_t l = *to_u64(big_l);

  // Slot i stands for residue r = 4i + 1.
  enum : char { kOpen = 0, kCovered = 1, kExcluded = 2 };
  const std::uint64_t slots = l / 4;
  std::vector<char> state(slots, kOpen);

  for (const auto& pp : factorize(big_l)) {
    const std::uint64_t f = *to_u64(pp.prime);
    if (f == 2) continue;  // r ≡ 1 (mod 4) is odd
    // Odd multiples of f that are ≡ 1 (mod 4) recur every 4f.
    const std::uint64_t first = (f % 4 == 1) ? f : 3 * f;
    for (std::uint64_t r = first; r < l; r += 4 * f) state[r / 4] = kExcluded;
  }
  for (const auto& c : to_small(classes)) {
    if (c.modulus % 4 == 0) {
      if (c.residue % 4 != 1) continue;
      for (std::uint64_t r = c.residue; r < l; r += c.modulus) {
        if (state[r / 4] == kOpen) state[r / 4] = kCovered;
      }
    } else {
      for (std::uint64_t r = c.residue; r < l; r += c.modulus) {
        if (r % 4 == 1 && state[r / 4] == kOpen) state[r / 4] = kCovered;
      }
    }
  }

  ResidueCensus census;
  census.lcm = l;
  for (std::uint64_t i = 0; i < slots; ++i) {
    if (state[i] == kExcluded) continue;
    ++census.admissible;
    if (state[i] == kCovered) {
      ++census.covered;
    } else if (!census.first_gap) {
      census.first_gap = 4 * i + 1;
    }
  }
  return census;
}

std::optional<ResidueClass> exact_gap_witness(const ClassSet& classes, std::uint64_t lcm_bound) {
  const auto census = residue_census(classes, lcm_bound);
  if (!census.first_gap) return std::nullopt;
  return ResidueClass::make(BigInt(static_cast<unsigned long>(census.lcm)),
                            BigInt(static_cast<unsigned long>(*census.first_gap)));
}

ExactRational coverage_density(const ClassSet& classes, std::uint64_t lcm_bound) {
  const auto census = residue_census(classes, lcm_bound);
  return reduce(BigInt(static_cast<unsigned long>(census.covered)),
                BigInt(static_cast<unsigned long>(census.admissible)));
}

ExactRational empirical_density(std::uint64_t limit, const ClassSet& classes) {
  if (limit < 5) throw DomainError("empirical_density: limit must be at least 5");
  const auto small = to_small(classes);
  std::uint64_t total = 0;
  std::uint64_t covered = 0;
  for_each_prime(5, limit, [&](std::uint64_t p) {
    if (p % 4 != 1) return;
    ++total;
    if (covered_small(p, small)) ++covered;
  });
  return reduce(BigInt(static_cast<unsigned long>(covered)),
                BigInt(static_cast<unsigned long>(total)));
}

CoverageReport analyze_coverage(std::uint64_t k_max, std::uint64_t scan_limit,
                                std::uint64_t lcm_bound) {
  CoverageReport report;
  report.k_max = k_max;
  report.scan_limit = scan_limit;
  report.lcm_bound = lcm_bound;
  report.classes = classes_for(k_max);
  report.uncovered_primes = uncovered_primes(scan_limit, report.classes);
  report.lcm = classes_lcm(report.classes);

  if (report.lcm <= BigInt(static_cast<unsigned long>(lcm_bound))) {
    const auto census = residue_census(report.classes, lcm_bound);
    report.density_method = DensityMethod::Exact;
    report.density = reduce(BigInt(static_cast<unsigned long>(census.covered)),
                            BigInt(static_cast<unsigned long>(census.admissible)));
    if (census.first_gap) {
      report.witness = ResidueClass::make(BigInt(static_cast<unsigned long>(census.lcm)),
                                          BigInt(static_cast<unsigned long>(*census.first_gap)));
    }
  } else {
    report.density_method = DensityMethod::Empirical;
    report.density = empirical_density(scan_limit, report.classes);
  }
  return report;
}

}  // namespace erdos_straus
