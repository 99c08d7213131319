#include "serialize.hpp"

#include "erdos_straus/errors.hpp"

namespace erdos_straus::cli {

namespace {

BigInt big_from(const json& j) {
  if (!j.is_string()) throw DomainError("expected a decimal string, got " + j.dump());
  return parse_integer(j.get<std::string>());
}

std::uint64_t u64_from(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (auto v = to_u64(big_from(j))) return *v;
  throw DomainError("integer out of range: " + j.dump());
}

json u64_array(const std::vector<std::uint64_t>& values) {
  json out = json::array();
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

std::vector<std::uint64_t> u64_vector(const json& j) {
  std::vector<std::uint64_t> out;
  for (const auto& v : j) out.push_back(u64_from(v));
  return out;
}

SolutionKind kind_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "I") return SolutionKind::TypeI;
  if (s == "II") return SolutionKind::TypeII;
  throw DomainError("unknown solution kind: " + s);
}

}  // namespace

json to_json(const EsTriple& t) {
  return json::array({t.x().get_str(), t.y().get_str(), t.z().get_str()});
}

EsTriple triple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw DomainError("triple must be a 3-element array");
  return EsTriple(big_from(j[0]), big_from(j[1]), big_from(j[2]));
}

json to_json(const FamilyParams& f) {
  return {{"kind", to_string(f.kind())}, {"k", f.k()}, {"l", f.l()}};
}

FamilyParams family_from_json(const json& j) {
  return FamilyParams(kind_from(j.at("kind")), j.at("k").get<std::uint64_t>(),
                      j.at("l").get<std::uint64_t>());
}

json to_json(const ResidueClass& c) {
  return {{"modulus", c.modulus.get_str()}, {"residue", c.residue.get_str()}};
}

ResidueClass residue_class_from_json(const json& j) {
  return ResidueClass::make(big_from(j.at("modulus")), big_from(j.at("residue")));
}

json to_json(const Solution& s) {
  return {{"n", s.n.get_str()},
          {"triple", to_json(s.triple)},
          {"strategy", to_string(s.strategy)},
          {"family", s.family ? to_json(*s.family) : json(nullptr)}};
}

Solution solution_from_json(const json& j) {
  auto strategy = strategy_from_string(j.at("strategy").get<std::string>());
  if (!strategy) throw DomainError("unknown strategy: " + j.at("strategy").dump());
  std::optional<FamilyParams> family;
  if (!j.at("family").is_null()) family = family_from_json(j.at("family"));
  return Solution{big_from(j.at("n")), triple_from_json(j.at("triple")), *strategy,
                  std::move(family)};
}

json to_json(const CoverageReport& r) {
  json classes = json::array();
  for (const auto& e : r.classes) {
    json entry = to_json(e.cls);
    json provenance = json::array();
    for (const auto& f : e.provenance) provenance.push_back(to_json(f));
    entry["families"] = std::move(provenance);
    classes.push_back(std::move(entry));
  }
  return {{"k_max", r.k_max},
          {"scan_limit", std::to_string(r.scan_limit)},
          {"lcm_bound", std::to_string(r.lcm_bound)},
          {"lcm", r.lcm.get_str()},
          {"classes", std::move(classes)},
          {"uncovered_primes", u64_array(r.uncovered_primes)},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"density",
           {{"numerator", r.density.numerator().get_str()},
            {"denominator", r.density.denominator().get_str()}}},
          {"density_method", to_string(r.density_method)}};
}

CoverageReport coverage_report_from_json(const json& j) {
  CoverageReport r;
  r.k_max = j.at("k_max").get<std::uint64_t>();
  r.scan_limit = u64_from(j.at("scan_limit"));
  r.lcm_bound = u64_from(j.at("lcm_bound"));
  r.lcm = big_from(j.at("lcm"));
  for (const auto& c : j.at("classes")) {
    ClassEntry entry{residue_class_from_json(c), {}};
    for (const auto& f : c.at("families")) entry.provenance.push_back(family_from_json(f));
    r.classes.push_back(std::move(entry));
  }
  r.uncovered_primes = u64_vector(j.at("uncovered_primes"));
  if (!j.at("witness").is_null()) r.witness = residue_class_from_json(j.at("witness"));
  r.density = reduce(big_from(j.at("density").at("numerator")),
                     big_from(j.at("density").at("denominator")));
  const auto method = j.at("density_method").get<std::string>();
  if (method == "exact") {
    r.density_method = DensityMethod::Exact;
  } else if (method == "empirical") {
    r.density_method = DensityMethod::Empirical;
  } else {
    throw DomainError("unknown density method: " + method);
  }
  return r;
}

json to_json(const ScanSummary& s) {
  json by_strategy = json::object();
  for (std::size_t i = 0; i < kStrategyCount; ++i) {
    by_strategy[to_string(static_cast<Strategy>(i))] = s.by_strategy[i];
  }
  return {{"limit", std::to_string(s.limit)},
          {"k_max", s.k_max},
          {"primes_checked", s.primes_checked},
          {"by_strategy", std::move(by_strategy)},
          {"alarms", u64_array(s.alarms)},
          {"failures", s.failures}};
}

json oracle_to_json(const BigInt& n, const std::vector<EsTriple>& triples,
                    const std::optional<TypeCounts>& counts) {
  json list = json::array();
  for (const auto& t : triples) list.push_back(to_json(t));
  json out = {{"n", n.get_str()}, {"triples", std::move(list)}};
  out["type_counts"] =
      counts ? json{{"I", counts->type_i}, {"II", counts->type_ii}} : json(nullptr);
  return out;
}

void write_solution_csv(std::ostream& os, const Solution& s, bool header) {
  if (header) os << "n,x,y,z,strategy,kind,k,l\n";
  os << s.n.get_str() << ',' << s.triple.x().get_str() << ',' << s.triple.y().get_str() << ','
     << s.triple.z().get_str() << ',' << to_string(s.strategy) << ',';
  if (s.family) {
    os << to_string(s.family->kind()) << ',' << s.family->k() << ',' << s.family->l();
  } else {
    os << ",,";
  }
  os << '\n';
}

}  // namespace erdos_straus::cli
