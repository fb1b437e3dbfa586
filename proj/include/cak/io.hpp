#pragma once

// JSON encodings of the domain types. Rationals are strings "num/den";
// directions are [dx, dy] integer pairs; turns are rational strings.

#include <json.hpp>

#include "cak/combinatorics.hpp"
#include "cak/geometry.hpp"
#include "cak/order_types.hpp"
#include "cak/types.hpp"

namespace cak::io {

using json = nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Point2& p);
Point2 point_from_json(const json& j);

json to_json(const Direction& d);
Direction direction_from_json(const json& j);

json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

json to_json(const SupportConfiguration& c);
SupportConfiguration support_configuration_from_json(const json& j);

json to_json(const SwapPair& sp);
SwapPair swap_pair_from_json(const json& j);

json to_json(const Tableau& t);
Tableau tableau_from_json(const json& j);

json to_json(const Chirotope& c);
Chirotope chirotope_from_json(const json& j);

json to_json(const PathSystem& p);
PathSystem path_system_from_json(const json& j);

json to_json(const AbstractConfiguration& c);
AbstractConfiguration abstract_configuration_from_json(const json& j);

json to_json(const CombinatorialType& ct);
CombinatorialType combinatorial_type_from_json(const json& j);

/// {"points": {"a": ["0","0"], ...}}
json to_json(const PointSet& p);
PointSet point_set_from_json(const json& j);

/// Reads a file, or standard input for "-"; malformed JSON is an InvalidInput error.
json read_json(const std::string& path);

}  // namespace cak::io
