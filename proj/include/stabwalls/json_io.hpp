#pragma once

#include "stabwalls/exact_sequence_audit.hpp"
#include "stabwalls/quiver_theta.hpp"
#include "stabwalls/wall_engine.hpp"

#include <json.hpp>

#include <string>

namespace stabwalls {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; integers are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const ChernCharacter& v);
ChernCharacter chern_from_json(const Json& j);

/// {"kind":"plane_sheaf","d":-3}, {"kind":"curve_sheaf","degree":3,"chi":1},
/// {"kind":"shift_of","of":{...}}.
Json to_json(const ObjectKind& k);
ObjectKind object_from_json(const Json& j);

/// Either an array of four rationals or an object description with an optional
/// integer "mult".
ChernCharacter class_from_json(const Json& j);

Json to_json(const Slope& s);
Json to_json(const ChargeValue& z);
Json to_json(const WallCircle& w);
WallCircle wall_from_json(const Json& j);

Json to_json(const PathSpec& p);
PathSpec path_from_json(const Json& j);

Json to_json(const Crossing& c);
Json to_json(const ScanResult& r);
Json to_json(const ChamberReport& r);

Json to_json(const QuiverRep& rep);
QuiverRep rep_from_json(const Json& j);
Json to_json(const StabilityVerdict& v);

LESFragment fragment_from_json(const Json& j);
Json to_json(const RankResult& r);
/// {"name":..., "cite":..., "rows":[line...], "columns":[line...]}; a line may
/// carry "expect": "feasible" | "infeasible".
ExtGrid grid_from_json(const Json& j);
Json to_json(const GridReport& r);

Json to_json(const std::vector<LedgerEntry>& ledger);
MonomialQuadricSet quadrics_from_json(const Json& j);
Json to_json(const CoordinateSubspace& s);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
/// Reads and parses a UTF-8 JSON file; ParseError if unreadable.
Json read_json_file(const std::string& path);

}  // namespace stabwalls
