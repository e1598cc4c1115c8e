#pragma once

#include <string>

#include <json.hpp>

#include "amalg/construct.hpp"
#include "amalg/fixtures.hpp"
#include "amalg/oracle.hpp"
#include "amalg/relation.hpp"
#include "amalg/report.hpp"
#include "amalg/structure.hpp"
#include "amalg/theory.hpp"
#include "amalg/vformation.hpp"

namespace amalg::io {

using nlohmann::json;

// Encodings are order-insensitive on input and emitted in canonical sorted
// order; duplicate pairs are rejected. Decoders throw InvalidInput with a
// description of the offending key.

json toJson(const Structure& s);
Structure structureFromJson(const json& j);

json toJson(const Theory& t);
Theory theoryFromJson(const json& j);

json toJson(const BinRel& r);
BinRel binRelFromJson(const json& j);

json toJson(const VFormation& v);
VFormation vformationFromJson(const json& j);

/// Amalgams flatten to the Structure encoding plus "iota"/"kappa" label maps.
json toJson(const construct::Amalgam& w);
construct::Amalgam amalgamFromJson(const json& j);

json toJson(const Report& r);
json toJson(const oracle::SearchResult& r);
json toJson(const fixtures::FixtureOutcome& o);

std::string modeName(construct::AmalgamMode m);
construct::AmalgamMode modeFromName(const std::string& name);

}  // namespace amalg::io
