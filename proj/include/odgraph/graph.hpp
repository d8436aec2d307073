#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "odgraph/group.hpp"

namespace od {

/// Edge cap for explicit construction; the size is computed from the order
/// profile before any adjacency is allocated.
inline constexpr Natural kDefaultEdgeBound = 50'000'000;

/// Exact chromatic number is only attempted up to this many vertices.
inline constexpr std::size_t kDefaultChromaticBound = 64;

using VertexId = std::uint32_t;

struct Vertex {
    Natural element;  // canonical element index
    Natural order;
};

/// Explicit order-divisor graph: vertex v is the element with index v, and
/// distinct u, v are adjacent iff their orders differ and one divides the other.
///
/// Construction works per pair of order classes, so it costs O(k^2 + E) for
/// k distinct orders. Neighbor lists are sorted ascending.
class ODGraph {
public:
    static ODGraph build(const GroupSpec& spec, Natural enumeration_bound = kDefaultEnumerationBound,
                         Natural edge_bound = kDefaultEdgeBound);

    /// Graph on arbitrary order labels (vertex i carries orders[i]).
    static ODGraph from_orders(std::vector<Natural> orders, Natural edge_bound = kDefaultEdgeBound);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_; }
    std::span<const Vertex> vertices() const { return vertices_; }
    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> offsets_;  // CSR row starts, size V + 1
    std::vector<VertexId> targets_;
    std::size_t edges_ = 0;
};

/// Invariants computed directly from an explicit graph by search.
struct InvariantReport {
    Natural group_order = 0;
    Natural size = 0;
    /// Shortest cycle length, 0 when acyclic.
    Natural girth = 0;
    std::vector<Natural> degree_sequence;  // by vertex id
    bool is_connected = false;
    bool is_star = false;
    bool is_bipartite = false;
    bool is_path = false;
    bool is_complete = false;
    bool is_cycle = false;
    /// Absent when the graph is disconnected.
    std::optional<Natural> radius;
    std::optional<Natural> diameter;
    std::optional<Natural> clique_number;
    std::optional<Natural> chromatic_number;
};

InvariantReport oracle_report(const ODGraph& g, std::size_t chromatic_bound = kDefaultChromaticBound);

/// Shortest cycle by BFS from every vertex; 0 if the graph is a forest.
Natural girth(const ODGraph& g);
bool is_bipartite(const ODGraph& g);

/// Exact clique number and chromatic number by backtracking.
/// Both return nullopt if the graph has more than `bound` vertices.
std::optional<Natural> clique_number(const ODGraph& g, std::size_t bound = kDefaultChromaticBound);
std::optional<Natural> chromatic_number(const ODGraph& g,
                                        std::size_t bound = kDefaultChromaticBound);

/// Sum of multiplicities of orders d != m with d | m or m | d.
/// Throws DomainError if m is not realized in the profile.
Natural degree_via_profile(const OrderProfile& profile, Natural m);

/// Half the multiplicity-weighted degree sum.
Natural size_via_profile(const OrderProfile& profile);

}  // namespace od
