#include "odgraph/export.hpp"

#include <sstream>

namespace od {

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

template <class Fn>
void for_each_edge(const ODGraph& g, Fn&& fn) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u < v) fn(u, v);
        }
    }
}

nlohmann::ordered_json optional_json(const std::optional<Natural>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

LabeledGraph build_labeled(const GroupSpec& spec, Natural enumeration_bound) {
    return {spec, ODGraph::build(spec, enumeration_bound), element_labels(spec, enumeration_bound)};
}

std::string to_dot(const LabeledGraph& g) {
    std::ostringstream out;
    out << "graph \"OD(" << dot_escape(g.spec.to_string()) << ")\" {\n";
    for (const auto& v : g.graph.vertices()) {
        out << "  " << v.element << " [label=\"" << dot_escape(g.labels[v.element]) << ':' << v.order
            << "\"];\n";
    }
    for_each_edge(g.graph, [&](VertexId u, VertexId v) { out << "  " << u << " -- " << v << ";\n"; });
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["size"] = r.size;
    j["girth"] = r.girth;
    j["degree_sequence"] = r.degree_sequence;
    j["is_connected"] = r.is_connected;
    j["is_star"] = r.is_star;
    j["is_bipartite"] = r.is_bipartite;
    j["is_path"] = r.is_path;
    j["is_complete"] = r.is_complete;
    j["is_cycle"] = r.is_cycle;
    j["radius"] = optional_json(r.radius);
    j["diameter"] = optional_json(r.diameter);
    j["clique_number"] = optional_json(r.clique_number);
    j["chromatic_number"] = optional_json(r.chromatic_number);
    return j;
}

nlohmann::ordered_json to_json(const LabeledGraph& g, const InvariantReport& invariants) {
    nlohmann::ordered_json j;
    j["group"] = g.spec.to_string();
    j["order"] = g.graph.vertex_count();
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.graph.vertices()) {
        j["vertices"].push_back({{"id", v.element}, {"label", g.labels[v.element]}, {"order", v.order}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for_each_edge(g.graph, [&](VertexId u, VertexId v) { j["edges"].push_back({u, v}); });
    j["invariants"] = to_json(invariants);
    return j;
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const LabeledGraph& g) {
    std::ostringstream out;
    out << "source,target,source_label,target_label\r\n";
    for_each_edge(g.graph, [&](VertexId u, VertexId v) {
        out << u << ',' << v << ',' << csv_field(g.labels[u]) << ',' << csv_field(g.labels[v]) << "\r\n";
    });
    return out.str();
}

}  // namespace od
