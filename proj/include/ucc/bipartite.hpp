// bipartite.hpp -- bipartite graphs, incidence graphs and incidence families.
//
// Vertices carry stable string labels and are globally indexed: class X
// occupies ids [0, nx), class Y occupies [nx, nx+ny). Adjacency is a
// symmetric neighbor mask per vertex; edges only cross classes.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ucc/bitset128.hpp"
#include "ucc/set_family.hpp"

namespace ucc {

struct BipartiteGraph {
    int nx = 0;
    int ny = 0;
    std::vector<std::string> labels;  // size nx+ny, unique
    std::vector<Mask> adj;            // neighbor masks over global vertex ids

    int vertex_count() const { return nx + ny; }
    bool is_x(int v) const { return v < nx; }
    int y_vertex(int j) const { return nx + j; }

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u)].test(v); }
    int degree(int v) const { return adj[static_cast<std::size_t>(v)].count(); }
    std::size_t edge_count() const;
    int min_degree() const;

    // -1 when the label is absent
    int find_label(const std::string& label) const;

    bool operator==(const BipartiteGraph&) const = default;
};

// edges as (x index, y index) pairs, range-checked
BipartiteGraph make_bipartite(std::vector<std::string> x_labels,
                              std::vector<std::string> y_labels,
                              const std::vector<std::pair<int, int>>& edges);

// X = the universe 0..u-1 (labels "0".."u-1"), one Y vertex "Si" per indexed
// member; edge Si--x iff x is in member i.
BipartiteGraph incidence_graph(const SetFamily& f);

enum class Side { X, Y };

// side X: the indexed family {N(y) : y in Y} over universe X; symmetric for Y
SetFamily incidence_family(const BipartiteGraph& g, Side side);

}  // namespace ucc
