#include "erdos_straus/families.hpp"

#include <numeric>

#include "erdos_straus/errors.hpp"

namespace erdos_straus {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

void check_params(std::uint64_t k, std::uint64_t l) {
  // Keeps 4k+3 and 2(4k+3) comfortably inside 64 bits.
  if (k > (std::uint64_t{1} << 58)) throw DomainError("family k out of range");
  const std::uint64_t q = 4 * k + 3;
  if (l < 1 || l > 2 * q) {
    throw DomainError("family l must lie in [1, 2(4k+3)], got l = " + std::to_string(l));
  }
  if (std::gcd(l, q) != 1) {
    throw DomainError("family l must be coprime to 4k+3, got l = " + std::to_string(l));
  }
}

bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

EsTriple finish(const BigInt& p, const FamilyParams& f, std::array<BigInt, 3> raw) {
  EsTriple t(std::move(raw[0]), std::move(raw[1]), std::move(raw[2]));
  if (!verify_triple(p, t)) {
    throw FamilyInapplicableError("family " + f.to_string() + " produced " + t.to_string() +
                                  ", which does not decompose 4/" + p.get_str());
  }
  return t;
}

}  // namespace

FamilyParams::FamilyParams(SolutionKind kind, std::uint64_t k, std::uint64_t l)
    : kind_(kind), k_(k), l_(l) {
  check_params(k, l);
}

BigInt FamilyParams::q() const { return 4 * big(k_) + 3; }

BigInt FamilyParams::partner() const { return 4 * q() - big(l_); }

std::string FamilyParams::to_string() const {
  return std::string("Type") + erdos_straus::to_string(kind_) + "(k=" + std::to_string(k_) +
         ", l=" + std::to_string(l_) + ")";
}

ResidueClass ResidueClass::make(BigInt modulus, BigInt residue) {
  if (modulus < 1) throw DomainError("residue class modulus must be positive");
  if (residue < 0 || residue >= modulus) {
    throw DomainError("residue " + residue.get_str() + " outside [0, " + modulus.get_str() + ")");
  }
  return ResidueClass{std::move(modulus), std::move(residue)};
}

bool ResidueClass::contains(const BigInt& n) const { return mod_floor(n, modulus) == residue; }

std::string ResidueClass::to_string() const {
  return residue.get_str() + " mod " + modulus.get_str();
}

BigInt modulus(std::uint64_t k, std::uint64_t l) {
  check_params(k, l);
  const BigInt q = 4 * big(k) + 3;
  const BigInt ell = big(l);
  const BigInt numerator = 16 * ell * q - 4 * ell * ell;
  const std::uint64_t g = std::gcd(l, std::uint64_t{4});
  const BigInt g2 = big(g * g);
  if (!divides(g2, numerator)) {
    throw InternalError("modulus numerator " + numerator.get_str() + " not divisible by " +
                        g2.get_str());
  }
  return numerator / g2;
}

BigInt type1_residue(std::uint64_t k, std::uint64_t l) {
  const BigInt m = modulus(k, l);
  const BigInt q = 4 * big(k) + 3;
  auto inv = mod_inverse(q, m);
  if (!inv) {
    throw InternalError("4k+3 = " + q.get_str() + " not invertible mod " + m.get_str());
  }
  return mod_floor(-*inv, m);
}

BigInt type2_residue(std::uint64_t k, std::uint64_t l) {
  const BigInt m = modulus(k, l);
  return mod_floor(-(4 * big(k) + 3), m);
}

ResidueClass residue_class(const FamilyParams& f) {
  BigInt r = f.kind() == SolutionKind::TypeI ? type1_residue(f.k(), f.l())
                                             : type2_residue(f.k(), f.l());
  return ResidueClass::make(modulus(f.k(), f.l()), std::move(r));
}

std::vector<FamilyParams> enumerate_params(std::uint64_t k_max) {
  std::vector<FamilyParams> out;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const std::uint64_t q = 4 * k + 3;
    for (std::uint64_t l = 1; l <= 2 * q; ++l) {
      if (std::gcd(l, q) != 1) continue;
      out.emplace_back(SolutionKind::TypeI, k, l);
      out.emplace_back(SolutionKind::TypeII, k, l);
    }
  }
  return out;
}

std::array<BigInt, 3> construct_raw(const BigInt& p, const FamilyParams& f) {
  if (p < 1) throw DomainError("construct: p must be positive");
  const ResidueClass cls = residue_class(f);
  if (!cls.contains(p)) {
    throw PreconditionError(p.get_str() + " is not in class " + cls.to_string() + " of " +
                            f.to_string());
  }
  const BigInt q = f.q();
  const BigInt ell = big(f.l());
  const BigInt partner = f.partner();

  auto exact = [&](const BigInt& num, const BigInt& den, const char* what) {
    if (!divides(den, num)) {
      throw FamilyInapplicableError(f.to_string() + " at p = " + p.get_str() + ": " + what +
                                    " = " + num.get_str() + "/" + den.get_str() +
                                    " is not an integer");
    }
    return BigInt(num / den);
  };

  if (f.kind() == SolutionKind::TypeI) {
    const BigInt d = q * p + 1;
    return {exact(d, partner, "x"), exact(d, ell, "y"), exact(p * d, 4, "z")};
  }
  const BigInt s = p + q;
  return {exact(s, 4, "x"), exact(p * s, partner, "y"), exact(p * s, ell, "z")};
}

EsTriple construct(const BigInt& p, const FamilyParams& f) {
  return finish(p, f, construct_raw(p, f));
}

EsTriple construct_type1(const BigInt& p, std::uint64_t k, std::uint64_t l) {
  return construct(p, FamilyParams(SolutionKind::TypeI, k, l));
}

EsTriple construct_type2(const BigInt& p, std::uint64_t k, std::uint64_t l) {
  return construct(p, FamilyParams(SolutionKind::TypeII, k, l));
}

FamilyTable::FamilyTable(std::uint64_t k_max) : k_max_(k_max) {
  for (const auto& f : enumerate_params(k_max)) {
    entries_.push_back({f, residue_class(f)});
  }
}

std::vector<FamilyParams> FamilyTable::applicable(const BigInt& p) const {
  if (mod_floor(p, 4) != 1) {
    throw DomainError("applicable_families: p must be ≡ 1 (mod 4), got " + p.get_str());
  }
  std::vector<FamilyParams> out;
  for (const auto& e : entries_) {
    if (e.cls.contains(p)) out.push_back(e.family);
  }
  return out;
}

std::vector<FamilyParams> applicable_families(const BigInt& p, std::uint64_t k_max) {
  return FamilyTable(k_max).applicable(p);
}

}  // namespace erdos_straus
