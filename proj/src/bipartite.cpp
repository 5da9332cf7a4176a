#include "ucc/bipartite.hpp"

#include <algorithm>
#include <unordered_set>

#include "ucc/errors.hpp"

namespace ucc {

std::size_t BipartiteGraph::edge_count() const {
    std::size_t twice = 0;
    for (const Mask& m : adj) twice += static_cast<std::size_t>(m.count());
    return twice / 2;
}

int BipartiteGraph::min_degree() const {
    int d = vertex_count() == 0 ? 0 : adj[0].count();
    for (const Mask& m : adj) d = std::min(d, m.count());
    return d;
}

int BipartiteGraph::find_label(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels[static_cast<std::size_t>(v)] == label) return v;
    return -1;
}

BipartiteGraph make_bipartite(std::vector<std::string> x_labels,
                              std::vector<std::string> y_labels,
                              const std::vector<std::pair<int, int>>& edges) {
    BipartiteGraph g;
    g.nx = static_cast<int>(x_labels.size());
    g.ny = static_cast<int>(y_labels.size());
    if (g.vertex_count() > Mask::capacity)
        throw ArgumentError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices; at most " + std::to_string(Mask::capacity) +
                            " are supported");
    g.labels = std::move(x_labels);
    g.labels.insert(g.labels.end(), y_labels.begin(), y_labels.end());

    std::unordered_set<std::string> seen;
    for (const auto& l : g.labels)
        if (!seen.insert(l).second)
            throw ArgumentError("duplicate vertex label \"" + l + "\"");

    g.adj.assign(static_cast<std::size_t>(g.vertex_count()), Mask{});
    for (const auto& [xi, yj] : edges) {
        if (xi < 0 || xi >= g.nx)
            throw RangeError("edge endpoint x index " + std::to_string(xi) +
                             " out of range");
        if (yj < 0 || yj >= g.ny)
            throw RangeError("edge endpoint y index " + std::to_string(yj) +
                             " out of range");
        g.adj[static_cast<std::size_t>(xi)].set(g.y_vertex(yj));
        g.adj[static_cast<std::size_t>(g.y_vertex(yj))].set(xi);
    }
    return g;
}

BipartiteGraph incidence_graph(const SetFamily& f) {
    std::vector<std::string> xs, ys;
    xs.reserve(static_cast<std::size_t>(f.universe_size));
    for (int e = 0; e < f.universe_size; ++e) xs.push_back(std::to_string(e));
    ys.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) ys.push_back("S" + std::to_string(i));

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (int e : mask_elements(f.members[i])) edges.emplace_back(e, static_cast<int>(i));
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

SetFamily incidence_family(const BipartiteGraph& g, Side side) {
    const bool from_x = side == Side::X;
    const int universe = from_x ? g.nx : g.ny;
    const int first_own = from_x ? g.nx : 0;   // ids of the class whose neighborhoods we read
    const int count_own = from_x ? g.ny : g.nx;
    const int base_other = from_x ? 0 : g.nx;  // ids of the universe class

    std::vector<Mask> members;
    members.reserve(static_cast<std::size_t>(count_own));
    for (int j = 0; j < count_own; ++j) {
        Mask nb = g.adj[static_cast<std::size_t>(first_own + j)];
        Mask local;
        while (nb.any()) local.set(nb.pop_lowest() - base_other);
        members.push_back(local);
    }
    return family_from_masks(std::move(members), universe, /*allow_duplicates=*/true);
}

}  // namespace ucc
