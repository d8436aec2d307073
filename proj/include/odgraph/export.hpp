#pragma once

#include <string>

#include "json.hpp"
#include "odgraph/graph.hpp"

namespace od {

enum class ExportFormat { Dot, Json, Csv };

/// Explicit graph with display labels, ready to serialize.
struct LabeledGraph {
    GroupSpec spec;
    ODGraph graph;
    std::vector<std::string> labels;  // by vertex id
};

LabeledGraph build_labeled(const GroupSpec& spec, Natural enumeration_bound = kDefaultEnumerationBound);

/// Undirected Graphviz graph; nodes labelled "element:order" in vertex order,
/// then edges u -- v with u < v in lexicographic order.
std::string to_dot(const LabeledGraph& g);

/// {group, order, vertices:[{id,label,order}], edges:[[u,v]], invariants:{...}}
nlohmann::ordered_json to_json(const LabeledGraph& g, const InvariantReport& invariants);

nlohmann::ordered_json to_json(const InvariantReport& invariants);

/// Edge list "source,target,source_label,target_label" with RFC 4180 quoting.
std::string to_csv(const LabeledGraph& g);

std::string csv_field(std::string_view field);

}  // namespace od
