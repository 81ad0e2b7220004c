#pragma once

// JSON views of every result type. Rationals are always strings.

#include <string>

#include <nlohmann/json.hpp>

#include "puiseux/atoms.hpp"
#include "puiseux/closures.hpp"
#include "puiseux/constructions.hpp"
#include "puiseux/density.hpp"
#include "puiseux/membership.hpp"

namespace puiseux {

using Json = nlohmann::ordered_json;

Json rat_list(const std::vector<Rat>& values);

Json to_json(const MemberResult& r);
Json to_json(const AtomicityVerdict& v);
Json to_json(const Factorization& z);
Json to_json(const FactorizationSet& s);
Json to_json(const LengthSet& s);
Json to_json(const GroupDescription& g);
Json to_json(const GpDensityResult& r);
Json to_json(const ConductorResult& r);
Json to_json(const DensityVerdict& v);
Json to_json(const ProbeReport& r);
Json to_json(const IsolationReport& r);
Json to_json(const DenseAtomsOutput& d);
Json to_json(const CantorOutput& c);

// "key: value" lines; nested keys joined by '.', list items indexed.
std::string to_text(const Json& j);

}  // namespace puiseux
