// stable_sets.hpp -- maximal-stable-set enumeration, rare vertices, the graph
// form of the UCC check and the rare<->abundant consistency check.
#pragma once

#include <cstddef>
#include <vector>

#include "ucc/bipartite.hpp"
#include "ucc/closure.hpp"

namespace ucc {

struct EnumOptions {
    int vertex_cap = 40;
    std::size_t set_cap = std::size_t{1} << 22;
    bool parallel = true;
};

// Every maximal stable set exactly once, canonically sorted (ascending bitset
// value), with recomputed per-vertex membership counts.
struct StableSetCollection {
    std::vector<Mask> sets;
    std::vector<std::size_t> counts;  // per global vertex id

    std::size_t total() const { return sets.size(); }
};

StableSetCollection maximal_stable_sets(const BipartiteGraph& g,
                                        const EnumOptions& opts = {});

// v is rare when 2*count(v) <= total; the boundary counts as rare
struct RareReport {
    std::size_t total = 0;
    std::vector<std::size_t> counts;  // per global vertex id
    std::vector<int> rare_x;          // global ids, ascending
    std::vector<int> rare_y;
};

RareReport rare_vertices(const BipartiteGraph& g, const EnumOptions& opts = {});

struct UccGraphReport {
    bool satisfied = false;
    int witness_x = -1;  // least rare vertex per class when satisfied
    int witness_y = -1;
    std::size_t total_sets = 0;
};

// requires at least one edge (the graph formulation does)
UccGraphReport graph_satisfies_ucc(const BipartiteGraph& g, const EnumOptions& opts = {});

// Both routes for one x in X: rarity by stable-set enumeration, abundance in
// the union closure of the X-side incidence family. They must agree.
struct Prop1Report {
    bool rare = false;
    bool abundant = false;
    bool agrees = false;
    std::size_t stable_total = 0;
    std::size_t stable_count = 0;   // sets containing x
    std::size_t closure_size = 0;
    std::size_t closure_count = 0;  // closure members containing x
};

Prop1Report check_prop1(const BipartiteGraph& g, int x, const EnumOptions& opts = {},
                        const ClosureOptions& copts = {});

}  // namespace ucc
