#include "erdos_straus/solver.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "erdos_straus/errors.hpp"
#include "erdos_straus/factor.hpp"
#include "erdos_straus/oracle.hpp"
#include "erdos_straus/sieve.hpp"

namespace erdos_straus {

namespace {

constexpr const char* kStrategyNames[kStrategyCount] = {"special-case", "greedy-3mod4", "family",
                                                        "oracle-fallback"};

}  // namespace

const char* to_string(Strategy s) { return kStrategyNames[static_cast<std::size_t>(s)]; }

std::optional<Strategy> strategy_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kStrategyCount; ++i) {
    if (s == kStrategyNames[i]) return static_cast<Strategy>(i);
  }
  return std::nullopt;
}

Solver::Solver(std::uint64_t k_max) : table_(k_max) {}

Solution Solver::solve(const BigInt& n) const {
  if (n < 2) throw DomainError("solve: n must be at least 2, got " + n.get_str());
  if (!is_prime(n)) throw CompositeInputError(n.get_str() + " is not prime");

  auto checked = [&](EsTriple t, Strategy s, std::optional<FamilyParams> f) {
    if (!verify_triple(n, t)) {
      throw InternalError(std::string(to_string(s)) + " produced unverified " + t.to_string() +
                          " for " + n.get_str());
    }
    return Solution{n, std::move(t), s, std::move(f)};
  };

  if (n == 2) return checked(special_case_two(), Strategy::SpecialCase, std::nullopt);
  if (mod_floor(n, 4) == 3) return checked(greedy_three_mod_four(n), Strategy::Greedy, std::nullopt);

  // Construction failures propagate: each one refutes a family identity.
  for (const auto& f : table_.applicable(n)) return checked(construct(n, f), Strategy::Family, f);

  auto fallback = first_solution(n);
  if (!fallback) {
    throw CounterexampleAlert("no decomposition of 4/" + n.get_str() + " exists");
  }
  return checked(std::move(*fallback), Strategy::OracleFallback, std::nullopt);
}

Solution solve_any(const BigInt& n, std::uint64_t k_max) { return Solver(k_max).solve(n); }

ScanSummary scan(const ScanOptions& options) {
  ScanSummary summary;
  summary.limit = options.limit;
  summary.k_max = options.k_max;

  const auto primes = sieve_primes(options.limit);
  summary.primes_checked = primes.size();
  const Solver solver(options.k_max);
  const unsigned workers = std::max(1u, options.workers);

  std::mutex merge;
  auto work = [&](unsigned worker) {
    ScanSummary local;
    // Interleaved so every worker sees the same mix of small and large primes.
    for (std::size_t i = worker; i < primes.size(); i += workers) {
      const BigInt p(static_cast<unsigned long>(primes[i]));
      try {
        const auto sol = solver.solve(p);
        ++local.by_strategy[static_cast<std::size_t>(sol.strategy)];
      } catch (const CounterexampleAlert&) {
        local.alarms.push_back(primes[i]);
      } catch (const std::exception& e) {
        local.failures.push_back(p.get_str() + ": " + e.what());
      }
    }
    std::lock_guard lock(merge);
    for (std::size_t s = 0; s < kStrategyCount; ++s) summary.by_strategy[s] += local.by_strategy[s];
    summary.alarms.insert(summary.alarms.end(), local.alarms.begin(), local.alarms.end());
    summary.failures.insert(summary.failures.end(), local.failures.begin(), local.failures.end());
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::sort(summary.alarms.begin(), summary.alarms.end());
  std::sort(summary.failures.begin(), summary.failures.end());
  return summary;
}

}  // namespace erdos_straus
