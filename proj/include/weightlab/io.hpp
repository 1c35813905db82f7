#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weightlab/compactness.hpp"
#include "weightlab/graph.hpp"
#include "weightlab/presented.hpp"
#include "weightlab/splitting.hpp"
#include "weightlab/weighting.hpp"

namespace weightlab {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// A graph file: the graph plus whatever "list" fields it carries.
struct GraphDocument {
    FiniteGraph graph;
    ListAssignment lists;  // only the items that had a "list"

    bool has_all_lists() const;
};

// {"vertices":[{"id":"a","tag":"finite","list":[1]}, {"id":"c","tag":{"infinite":0}}],
//  "edges":[{"u":"a","v":"b","list":[1,2,3]}]}
// "vertices" may be omitted; ids may be strings or integers. Throws InputError.
GraphDocument graph_from_json(const Json& j);

// Plain edge list: one "u v" pair per line; blank lines and '#' comments skipped.
GraphDocument graph_from_edge_list(std::string_view text);

// Picks the JSON or edge-list reader by the first non-blank character.
GraphDocument read_graph_file(const std::string& path);

OrderedJson graph_to_json(const FiniteGraph& g, const ListAssignment* lists = nullptr);

// {"vertex_weights":{"a":1},"edge_weights":[{"u":"a","v":"b","w":2}]}
Weighting weighting_from_json(const Json& j);
Weighting read_weighting_file(const std::string& path);
OrderedJson weighting_to_json(const Weighting& w);

OrderedJson validity_to_json(const ValidityReport& r);
OrderedJson ball_to_json(const Ball& b);
OrderedJson persistence_to_json(const PersistenceReport& r);
OrderedJson split_report_to_json(const SplitReport& r);

Json parse_json_text(std::string_view text);

}  // namespace weightlab
