#pragma once

#include <json.hpp>

#include "ribbon/bijection.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/tableaux.hpp"

namespace ribbon {

// JSON encodings: a partition is an array of parts, a tuple an array of
// partitions, a border strip tableau {"k":..., "flag":[...]}, a tableau
// tuple {"shapes":..., "entries":...}. Polynomial coefficients are decimal
// strings so that arbitrary precision survives the round trip.

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const PartitionTuple& t);
nlohmann::json to_json(const BorderStripTableau& b);
nlohmann::json to_json(const StandardTableauTuple& t);
nlohmann::json to_json(const SemistandardTableauTuple& t);
nlohmann::json to_json(const IntPoly& p);
nlohmann::json to_json(const BiPoly& p);

Partition partition_from_json(const nlohmann::json& j);
PartitionTuple partition_tuple_from_json(const nlohmann::json& j);
BorderStripTableau bst_from_json(const nlohmann::json& j);
StandardTableauTuple syt_tuple_from_json(const nlohmann::json& j);
SemistandardTableauTuple ssyt_tuple_from_json(const nlohmann::json& j);
IntPoly intpoly_from_json(const nlohmann::json& j);
BiPoly bipoly_from_json(const nlohmann::json& j);

}  // namespace ribbon
