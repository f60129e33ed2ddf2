#pragma once

#include <string>

#include <json.hpp>

#include "parade/charted.hpp"
#include "parade/pgroup.hpp"

namespace parade {

using Json = nlohmann::ordered_json;

// Canonical JSON record of a realization. Charted realizations serialize
// explicitly (elements, unit, inverses, charts, support and product triples);
// formula-backed realizations serialize as their construction data, so a
// round trip rebuilds the same exact semantics at every word length.
Json pg_to_json(const PGPtr& pg);
PGPtr pg_from_json(const Json& j);

std::string pg_to_string(const PGPtr& pg);  // canonical bytes (round-trip exact)
PGPtr pg_from_string(const std::string& text);

Json group_table_to_json(const GroupTable& g);
GroupTable group_table_from_json(const Json& j);

// Chart graph: charts as nodes, support triples as labeled edges.
std::string dot_chart_graph(const ChartedPartialGroup& pg);

}  // namespace parade
