// Exact clique and chromatic numbers for small graphs (at most 64 vertices),
// using one 64-bit adjacency mask per vertex.

#include <bit>
#include <cstdint>

#include "odgraph/graph.hpp"

namespace od {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const ODGraph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    }
    return adj;
}

// Bron-Kerbosch with pivoting.
void max_clique(const std::vector<Mask>& adj, Mask r_size, Mask p, Mask x, Natural& best) {
    if (p == 0 && x == 0) {
        best = std::max<Natural>(best, r_size);
        return;
    }
    if (r_size + std::popcount(p) <= best) return;
    const int pivot = std::countr_zero(p | x);
    Mask candidates = p & ~adj[pivot];
    while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        max_clique(adj, r_size + 1, p & adj[v], x & adj[v], best);
        p &= ~(Mask{1} << v);
        x |= Mask{1} << v;
    }
}

class Colorer {
public:
    Colorer(const std::vector<Mask>& adj, Natural colors)
        : adj_(adj), colors_(colors), color_(adj.size(), -1), forbidden_(adj.size(), 0) {}

    bool solve() { return extend(0, 0); }

private:
    // DSATUR order: most distinct neighbor colors first, ties by degree.
    int pick() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (color_[v] != -1) continue;
            const int sat = std::popcount(forbidden_[v]);
            const int deg = std::popcount(adj_[v]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = static_cast<int>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool extend(std::size_t colored, Natural used) {
        if (colored == adj_.size()) return true;
        const int v = pick();
        // A fresh color is interchangeable with any other fresh color.
        const Natural limit = std::min(colors_, used + 1);
        for (Natural c = 0; c < limit; ++c) {
            if (forbidden_[v] & (Mask{1} << c)) continue;
            std::vector<Mask> saved = forbidden_;
            color_[v] = static_cast<int>(c);
            Mask nbrs = adj_[v];
            while (nbrs) {
                const int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                forbidden_[w] |= Mask{1} << c;
            }
            if (extend(colored + 1, std::max(used, c + 1))) return true;
            forbidden_ = std::move(saved);
            color_[v] = -1;
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    Natural colors_;
    std::vector<int> color_;
    std::vector<Mask> forbidden_;
};

}  // namespace

std::optional<Natural> clique_number(const ODGraph& g, std::size_t bound) {
    const std::size_t n = g.vertex_count();
    if (n > bound || n > 64) return std::nullopt;
    if (n == 0) return 0;
    const auto adj = adjacency_masks(g);
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    Natural best = 0;
    max_clique(adj, 0, all, 0, best);
    return best;
}

std::optional<Natural> chromatic_number(const ODGraph& g, std::size_t bound) {
    const auto omega = clique_number(g, bound);
    if (!omega) return std::nullopt;
    if (g.vertex_count() == 0) return 0;
    const auto adj = adjacency_masks(g);
    for (Natural k = *omega; k <= g.vertex_count(); ++k) {
        if (Colorer(adj, k).solve()) return k;
    }
    return g.vertex_count();
}

}  // namespace od
