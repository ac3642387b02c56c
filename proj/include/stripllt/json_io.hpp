#pragma once

#include "stripllt/chromatic.hpp"
#include "stripllt/structure.hpp"
#include "stripllt/symfunc.hpp"
#include "stripllt/wgraph.hpp"

#include <json.hpp>

namespace sllt {

using Json = nlohmann::json;

Json to_json(const Integer& z); // number when it fits in 64 bits, else decimal string
Integer integer_from_json(const Json& j);

Json to_json(const QPoly& p); // [[exponent, coefficient], ...], exponents decreasing
QPoly qpoly_from_json(const Json& j);

Json to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const Json& j);
// "(2,1)" -> "q"
Json display_json(const BasisExpansion& e);

Json to_json(const SymFunc& f);

Json to_json(const WeightedGraph& g); // {"weights": [...], "edges": [[a, b, w], ...]} with w > 0
WeightedGraph wgraph_from_json(const Json& j);

Json to_json(const LabelledGraph& g);

} // namespace sllt
