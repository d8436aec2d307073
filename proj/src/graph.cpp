#include "odgraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace od {

namespace {

bool comparable(Natural a, Natural b) { return a != b && (b % a == 0 || a % b == 0); }

/// BFS distances from `source`; unreachable vertices get the max value.
std::vector<Natural> bfs_distances(const ODGraph& g, VertexId source) {
    std::vector<Natural> dist(g.vertex_count(), std::numeric_limits<Natural>::max());
    std::queue<VertexId> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == std::numeric_limits<Natural>::max()) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

// Construction ------------------------------------------------------------

ODGraph ODGraph::build(const GroupSpec& spec, Natural enumeration_bound, Natural edge_bound) {
    const Natural order = group_order(spec);
    if (order > enumeration_bound) {
        throw ResourceError("group " + spec.to_string() + " has order " + std::to_string(order) +
                            ", above the enumeration bound " + std::to_string(enumeration_bound));
    }
    if (order > std::numeric_limits<VertexId>::max()) {
        throw ResourceError("group " + spec.to_string() + " is too large for 32-bit vertex ids");
    }
    return from_orders(element_orders(spec, enumeration_bound), edge_bound);
}

ODGraph ODGraph::from_orders(std::vector<Natural> orders, Natural edge_bound) {
    std::map<Natural, std::vector<VertexId>> classes;
    for (std::size_t v = 0; v < orders.size(); ++v) {
        if (orders[v] == 0) throw DomainError("vertex orders must be >= 1");
        classes[orders[v]].push_back(static_cast<VertexId>(v));
    }

    // Members adjacent to each order class; every vertex of a class shares it.
    std::map<Natural, std::vector<VertexId>> class_neighbors;
    Wide edges_twice = 0;
    for (const auto& [a, members_a] : classes) {
        auto& nbrs = class_neighbors[a];
        for (const auto& [b, members_b] : classes) {
            if (comparable(a, b)) nbrs.insert(nbrs.end(), members_b.begin(), members_b.end());
        }
        edges_twice += Wide(members_a.size()) * nbrs.size();
        if (edges_twice / 2 > edge_bound) {
            throw ResourceError("order-divisor graph exceeds the edge bound " +
                                std::to_string(edge_bound));
        }
        std::sort(nbrs.begin(), nbrs.end());
    }

    ODGraph g;
    g.vertices_.reserve(orders.size());
    g.offsets_.reserve(orders.size() + 1);
    g.targets_.reserve(static_cast<std::size_t>(edges_twice));
    g.offsets_.push_back(0);
    for (std::size_t v = 0; v < orders.size(); ++v) {
        g.vertices_.push_back({v, orders[v]});
        const auto& nbrs = class_neighbors[orders[v]];
        g.targets_.insert(g.targets_.end(), nbrs.begin(), nbrs.end());
        g.offsets_.push_back(g.targets_.size());
    }
    g.edges_ = static_cast<std::size_t>(edges_twice / 2);
    return g;
}

std::span<const VertexId> ODGraph::neighbors(VertexId v) const {
    return {targets_.data() + offsets_.at(v), offsets_.at(v + 1) - offsets_[v]};
}

bool ODGraph::adjacent(VertexId u, VertexId v) const {
    const auto n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
}

// Search-based invariants -------------------------------------------------

Natural girth(const ODGraph& g) {
    constexpr Natural kUnseen = std::numeric_limits<Natural>::max();
    const std::size_t n = g.vertex_count();
    Natural best = kUnseen;
    std::vector<Natural> dist(n);
    std::vector<VertexId> parent(n);
    for (VertexId s = 0; s < n && best > 3; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        std::queue<VertexId> q;
        dist[s] = 0;
        parent[s] = s;
        q.push(s);
        while (!q.empty()) {
            const VertexId u = q.front();
            q.pop();
            // No shorter cycle through s can be found past this depth.
            if (2 * dist[u] >= best) break;
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] == kUnseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == kUnseen ? 0 : best;
}

bool is_bipartite(const ODGraph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            const VertexId u = q.front();
            q.pop();
            for (VertexId w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

InvariantReport oracle_report(const ODGraph& g, std::size_t chromatic_bound) {
    InvariantReport r;
    const std::size_t n = g.vertex_count();
    r.group_order = n;
    r.degree_sequence.reserve(n);
    Natural degree_sum = 0;
    for (VertexId v = 0; v < n; ++v) {
        r.degree_sequence.push_back(g.degree(v));
        degree_sum += g.degree(v);
    }
    r.size = degree_sum / 2;
    if (n == 0) return r;

    r.girth = girth(g);
    r.is_bipartite = is_bipartite(g);

    Natural radius = std::numeric_limits<Natural>::max();
    Natural diameter = 0;
    r.is_connected = true;
    for (VertexId v = 0; v < n && r.is_connected; ++v) {
        const auto dist = bfs_distances(g, v);
        const Natural ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc == std::numeric_limits<Natural>::max()) r.is_connected = false;
        radius = std::min(radius, ecc);
        diameter = std::max(diameter, ecc);
    }
    if (r.is_connected) {
        r.radius = radius;
        r.diameter = diameter;
    }

    const auto& deg = r.degree_sequence;
    const auto count_deg = [&](Natural d) { return std::count(deg.begin(), deg.end(), d); };
    const Natural max_deg = *std::max_element(deg.begin(), deg.end());

    // One center of degree |V| - 1, every other vertex a leaf.
    const auto centers = count_deg(n - 1);
    r.is_star = n == 1 || (n == 2 && r.size == 1) ||
                (centers == 1 && count_deg(1) == static_cast<std::ptrdiff_t>(n - 1));
    r.is_path = n >= 2 && r.is_connected && r.size == n - 1 && max_deg <= 2;
    r.is_complete = Wide(r.size) * 2 == Wide(n) * (n - 1);
    r.is_cycle = n >= 3 && r.is_connected && r.size == n &&
                 count_deg(2) == static_cast<std::ptrdiff_t>(n);

    r.clique_number = clique_number(g, chromatic_bound);
    r.chromatic_number = chromatic_number(g, chromatic_bound);
    return r;
}

// Profile-based counts ----------------------------------------------------

Natural degree_via_profile(const OrderProfile& profile, Natural m) {
    if (!profile.realizes(m)) {
        throw DomainError("order " + std::to_string(m) + " is not realized in the profile");
    }
    Natural degree = 0;
    for (const auto& [d, count] : profile.entries()) {
        if (comparable(d, m)) degree += count;
    }
    return degree;
}

Natural size_via_profile(const OrderProfile& profile) {
    Wide twice = 0;
    for (const auto& [m, count] : profile.entries()) {
        twice = nt::checked_add(twice, Wide(count) * degree_via_profile(profile, m), "graph size");
    }
    return nt::narrow(nt::exact_div(twice, 2, "handshake"), "graph size");
}

}  // namespace od
