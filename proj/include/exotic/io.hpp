#pragma once

#include <string>

#include <json.hpp>

#include "exotic/census.hpp"
#include "exotic/ffield.hpp"
#include "exotic/hyperoct.hpp"
#include "exotic/springer.hpp"
#include "exotic/symplectic.hpp"

namespace exotic {

using Json = nlohmann::ordered_json;

/// {"p", "rows", "cols", "entries": row-major}.
Json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const Json& j);

/// {"p", "n", "flavor", "x", "v"}. Validates the pair.
Json pair_to_json(const ExoticPair& pair);
ExoticPair pair_from_json(const Json& j);

/// One row per orbit: label, dim, d.
Json orbits_to_json(int n);
std::string orbits_to_tsv(int n);

Json springer_to_json(const SpringerTable& table);
SpringerTable springer_from_json(const Json& j);
std::string springer_to_tsv(const SpringerTable& table);

Json chartable_to_json(const CharacterTable& table);
CharacterTable chartable_from_json(const Json& j);
std::string chartable_to_tsv(const CharacterTable& table);

Json branching_to_json(const BranchingMatrix& b);
BranchingMatrix branching_from_json(const Json& j);
std::string branching_to_tsv(const BranchingMatrix& b);

Json graded_to_json(const GradedWnModule& m);

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

Json census_to_json(const CensusResult& c);
CensusResult census_from_json(const Json& j);

Json klyachko_to_json(const KlyachkoReport& k);

/// Parses text as JSON; failures become ParseError.
Json parse_json(const std::string& text);

}  // namespace exotic
