#pragma once

#include <string>

#include "json.hpp"

#include "flagwalk/autgroup.hpp"
#include "flagwalk/classify.hpp"
#include "flagwalk/cyclets.hpp"
#include "flagwalk/flagmap.hpp"
#include "flagwalk/walks.hpp"

namespace flagwalk {

// Stable, key-ordered JSON renderings for CLI output. For a fixed input and
// version the bytes are deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const ValidationReport& rep);
Json info_json(const FlagSystem& m, const FaceStructure& fs);
Json to_json(const SymmetryReport& rep, const AutGroup& aut);
Json to_json(const WalkOrbitRow& row);
Json to_json(const WalkOrbitReport& report);
Json to_json(const EdgeSetClassification& c);
Json cyclets_json(int valence, const std::vector<CycletOrbit>& orbits);

} // namespace flagwalk
