#include "ucc/symmetry.hpp"

#include <algorithm>
#include <string>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

void require_bijection(const BipartiteGraph& g, const VertexBijection& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.forward.size()) != n)
        throw ArgumentError("bijection table covers " + std::to_string(f.forward.size()) +
                            " vertices, graph has " + std::to_string(n));
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int t = f(v);
        if (t < 0 || t >= n || hit[static_cast<std::size_t>(t)])
            throw ArgumentError("mapping is not a bijection on V(G)");
        hit[static_cast<std::size_t>(t)] = 1;
    }
}

Mask map_mask(Mask m, const VertexBijection& f) {
    Mask out;
    while (m.any()) out.set(f(m.pop_lowest()));
    return out;
}

// sorted degrees of each neighborhood, a cheap invariant under automorphism
std::vector<std::vector<int>> neighbor_degree_signatures(const BipartiteGraph& g) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        Mask nb = g.adj[static_cast<std::size_t>(v)];
        while (nb.any()) sig[static_cast<std::size_t>(v)].push_back(g.degree(nb.pop_lowest()));
        std::sort(sig[static_cast<std::size_t>(v)].begin(), sig[static_cast<std::size_t>(v)].end());
    }
    return sig;
}

struct SwapSearch {
    const BipartiteGraph& g;
    std::vector<std::vector<int>> sig;
    std::vector<int> order;    // assignment order: x0, y0, x1, y1, ...
    std::vector<int> forward;  // -1 while unassigned
    std::vector<char> used;
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    SwapSearch(const BipartiteGraph& graph, std::uint64_t node_budget)
        : g(graph), sig(neighbor_degree_signatures(graph)), budget(node_budget) {
        const int n = g.vertex_count();
        forward.assign(static_cast<std::size_t>(n), -1);
        used.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < g.nx; ++i) {
            order.push_back(i);
            order.push_back(g.y_vertex(i));
        }
    }

    bool consistent(int v, int t) const {
        if (g.degree(v) != g.degree(t)) return false;
        if (sig[static_cast<std::size_t>(v)] != sig[static_cast<std::size_t>(t)]) return false;
        for (int u = 0; u < g.vertex_count(); ++u) {
            int fu = forward[static_cast<std::size_t>(u)];
            if (fu < 0) continue;
            if (g.adjacent(u, v) != g.adjacent(fu, t)) return false;
        }
        return true;
    }

    bool assign(std::size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        const bool to_y = g.is_x(v);  // X maps into Y and vice versa
        const int begin = to_y ? g.nx : 0;
        const int end = to_y ? g.vertex_count() : g.nx;
        for (int t = begin; t < end; ++t) {
            if (used[static_cast<std::size_t>(t)]) continue;
            if (++nodes > budget)
                throw ResourceLimitError("automorphism search exceeded its node budget of " +
                                         std::to_string(budget));
            if (!consistent(v, t)) continue;
            forward[static_cast<std::size_t>(v)] = t;
            used[static_cast<std::size_t>(t)] = 1;
            if (assign(pos + 1)) return true;
            forward[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(t)] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_automorphism(const BipartiteGraph& g, const VertexBijection& f) {
    require_bijection(g, f);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (map_mask(g.adj[static_cast<std::size_t>(v)], f) !=
            g.adj[static_cast<std::size_t>(f(v))])
            return false;
    return true;
}

bool is_swap_automorphism(const BipartiteGraph& g, const VertexBijection& f) {
    require_bijection(g, f);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.is_x(v) == g.is_x(f(v))) return false;
    return is_automorphism(g, f);
}

SwapSearchResult find_swap_automorphism(const BipartiteGraph& g, const SearchOptions& opts) {
    SwapSearchResult res{SwapSearchOutcome::none_exhausted, std::nullopt, 0};
    if (g.nx != g.ny) {
        res.outcome = SwapSearchOutcome::none_class_size;
        return res;
    }
    std::vector<int> dx, dy;
    for (int v = 0; v < g.nx; ++v) dx.push_back(g.degree(v));
    for (int v = g.nx; v < g.vertex_count(); ++v) dy.push_back(g.degree(v));
    std::sort(dx.begin(), dx.end());
    std::sort(dy.begin(), dy.end());
    if (dx != dy) {
        res.outcome = SwapSearchOutcome::none_degree_multiset;
        return res;
    }

    SwapSearch search(g, opts.node_budget);
    const bool found = search.assign(0);
    res.nodes = search.nodes;
    if (found) {
        res.outcome = SwapSearchOutcome::found;
        res.witness = VertexBijection{search.forward};
    }
    return res;
}

std::pair<int, int> rare_pair_via_swap(const BipartiteGraph& g, const VertexBijection& f,
                                       const EnumOptions& opts) {
    if (g.edge_count() == 0)
        throw ArgumentError("rare_pair_via_swap requires at least one edge");
    if (!is_swap_automorphism(g, f))
        throw ArgumentError("the supplied mapping is not a swap automorphism");

    RareReport rare = rare_vertices(g, opts);
    if (rare.rare_x.empty())
        throw Error("internal: bipartite graph with no rare X vertex contradicts "
                    "the edge-rarity argument");
    const int a = rare.rare_x.front();  // lexicographically least rare vertex of X
    const int b = f(a);
    if (2 * rare.counts[static_cast<std::size_t>(b)] > rare.total)
        throw Error("internal: image of a rare vertex under a swap automorphism "
                    "must be rare");
    return {a, b};
}

}  // namespace ucc
