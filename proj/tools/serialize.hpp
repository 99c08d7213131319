#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "erdos_straus/covering.hpp"
#include "erdos_straus/oracle.hpp"
#include "erdos_straus/solver.hpp"

namespace erdos_straus::cli {

using nlohmann::json;

// Wire format: every arbitrary-precision integer is a decimal string.

json to_json(const EsTriple& t);
EsTriple triple_from_json(const json& j);

json to_json(const FamilyParams& f);
FamilyParams family_from_json(const json& j);

json to_json(const ResidueClass& c);
ResidueClass residue_class_from_json(const json& j);

/// {"n", "triple", "strategy", "family": {"kind", "k", "l"} | null}
json to_json(const Solution& s);
Solution solution_from_json(const json& j);

json to_json(const CoverageReport& r);
CoverageReport coverage_report_from_json(const json& j);

json to_json(const ScanSummary& s);

json oracle_to_json(const BigInt& n, const std::vector<EsTriple>& triples,
                    const std::optional<TypeCounts>& counts);

/// Header row and one data row mirroring the JSON columns.
void write_solution_csv(std::ostream& os, const Solution& s, bool header = true);

}  // namespace erdos_straus::cli
