// graph_zoo.hpp -- generators for the graph families used throughout:
// grids, cylinders, tori, hypercubes, crown graphs and Moebius ladders,
// with their canonical class-swapping maps where one is known in closed form.
#pragma once

#include <string>
#include <vector>

#include "ucc/bipartite.hpp"
#include "ucc/stable_sets.hpp"
#include "ucc/symmetry.hpp"

namespace ucc {

enum class GridKind { grid, cylinder, torus, hypercube, crown, moebius };

struct GridSpec {
    GridKind kind = GridKind::grid;
    int m = 0;  // rows / cycle length / hypercube dimension / crown and ladder size
    int n = 0;  // columns (product kinds only)

    static GridSpec grid(int m, int n) { return {GridKind::grid, m, n}; }
    static GridSpec cylinder(int m, int n) { return {GridKind::cylinder, m, n}; }
    static GridSpec torus(int m, int n) { return {GridKind::torus, m, n}; }
    static GridSpec hypercube(int d) { return {GridKind::hypercube, d, 0}; }
    static GridSpec crown(int n) { return {GridKind::crown, n, 0}; }
    static GridSpec moebius(int n) { return {GridKind::moebius, n, 0}; }
};

const char* grid_kind_name(GridKind k);

// Labeled bipartite instance; refuses non-bipartite parameters with the
// parity condition spelled out. Class X is the even-parity class.
BipartiteGraph generate(const GridSpec& spec);

// The closed-form swap map: row shift for cylinder/torus, reflection along an
// even axis for grids. Other kinds have no canonical map and are searched.
// g must be generate(spec).
VertexBijection canonical_swap_map(const GridSpec& spec, const BipartiteGraph& g);

struct DegreeTwoReport {
    std::size_t degree_two_vertices = 0;
    std::size_t checked_neighbors = 0;
    std::vector<std::pair<int, int>> violations;  // (degree-2 vertex, non-rare neighbor)
    bool vacuous() const { return degree_two_vertices == 0; }
    bool ok() const { return violations.empty(); }
};

// neighbors of degree-2 vertices are rare; reports any counterexample
DegreeTwoReport degree_two_neighbor_rare_check(const BipartiteGraph& g,
                                               const EnumOptions& opts = {});

}  // namespace ucc
