#include "erdos_straus/triple.hpp"

#include <algorithm>

#include "erdos_straus/errors.hpp"
#include "erdos_straus/factor.hpp"

namespace erdos_straus {

EsTriple::EsTriple(BigInt a, BigInt b, BigInt c) : v_{std::move(a), std::move(b), std::move(c)} {
  for (const auto& v : v_) {
    if (v <= 0) throw DomainError("triple entries must be positive");
  }
  std::sort(v_.begin(), v_.end());
}

bool operator<(const EsTriple& a, const EsTriple& b) {
  return std::lexicographical_compare(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
}

std::string EsTriple::to_string() const {
  return "(" + v_[0].get_str() + ", " + v_[1].get_str() + ", " + v_[2].get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const EsTriple& t) { return os << t.to_string(); }

const char* to_string(SolutionKind kind) { return kind == SolutionKind::TypeI ? "I" : "II"; }

bool verify_triple(const BigInt& n, const EsTriple& t) {
  if (n < 1) return false;
  const auto& [x, y, z] = t.values();
  const BigInt lhs = 4 * x * y * z;
  const BigInt rhs = n * (x * y + y * z + z * x);
  return lhs == rhs;
}

SolutionKind classify(const BigInt& p, const EsTriple& t) {
  if (p < 3 || !is_prime(p)) throw DomainError("classify: p must be an odd prime, got " + p.get_str());
  if (!verify_triple(p, t)) {
    throw ContractError("classify: " + t.to_string() + " does not decompose 4/" + p.get_str());
  }
  if (mpz_divisible_p(t.x().get_mpz_t(), p.get_mpz_t())) {
    throw StructuralAnomalyError("p divides x in " + t.to_string() + " for p = " + p.get_str());
  }
  if (!mpz_divisible_p(t.z().get_mpz_t(), p.get_mpz_t())) {
    throw StructuralAnomalyError("p does not divide z in " + t.to_string() + " for p = " + p.get_str());
  }
  return mpz_divisible_p(t.y().get_mpz_t(), p.get_mpz_t()) ? SolutionKind::TypeII
                                                            : SolutionKind::TypeI;
}

EsTriple special_case_two() { return EsTriple(1, 2, 2); }

std::pair<BigInt, BigInt> split_unit(const BigInt& n) {
  if (n < 1) throw DomainError("split_unit: n must be positive");
  BigInt next = n + 1;
  BigInt product = n * next;
  return {std::move(next), std::move(product)};
}

EsTriple greedy_three_mod_four(const BigInt& p) {
  if (p < 3 || mod_floor(p, 4) != 3) {
    throw DomainError("greedy_three_mod_four: p must be ≡ 3 (mod 4), got " + p.get_str());
  }
  BigInt a = (p + 1) / 4;
  BigInt b = p * a;
  auto [b1, b2] = split_unit(b);
  return EsTriple(std::move(a), std::move(b1), std::move(b2));
}

std::optional<BigInt> prop1_k(const BigInt& p, const EsTriple& t) {
  const BigInt excess = 4 * t.z() - p;
  if (excess <= 0) return std::nullopt;
  const BigInt p2 = p * p;
  if (!mpz_divisible_p(excess.get_mpz_t(), p2.get_mpz_t())) return std::nullopt;
  const BigInt q = excess / p2;
  if (mod_floor(q, 4) != 3) return std::nullopt;
  return BigInt((q - 3) / 4);
}

std::optional<BigInt> prop2_k(const BigInt& p, const EsTriple& t) {
  const BigInt q = 4 * t.x() - p;
  if (q < 3 || mod_floor(q, 4) != 3) return std::nullopt;
  return BigInt((q - 3) / 4);
}

bool z_relation_holds(const BigInt& p, const EsTriple& t) {
  const auto& [x, y, z] = t.values();
  const BigInt xy = x * y;
  const BigInt g = gcd(xy, x + y);
  return z * g == xy * p && 4 * xy - (x + y) * p == g;
}

}  // namespace erdos_straus
