#pragma once

#include <json.hpp>

#include "coarray/bounds.hpp"
#include "coarray/codebook.hpp"
#include "coarray/figure3.hpp"
#include "coarray/geometry.hpp"
#include "coarray/search.hpp"

namespace coarray {

/// JSON conventions: geometries are integer arrays; big integers are decimal
/// strings (consumers must not assume they fit in 64 bits); absent optionals
/// are null; tuples use keys Q, N_tx, N_rx, N_sigma.

nlohmann::json to_json(const ArrayGeometry& g);
ArrayGeometry geometry_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParameterTuple& t);
ParameterTuple tuple_from_json(const nlohmann::json& j);

/// {"tx":[...],"rx":[...],"Q":int,"kind":"constrained|unconstrained",
///  "codewords":[[...],...]}; rx is omitted for unconstrained books.
nlohmann::json to_json(const Codebook& c);
Codebook codebook_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const SweepEntry& e);
nlohmann::json to_json(const Figure3Row& r);

}  // namespace coarray
