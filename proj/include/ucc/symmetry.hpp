// symmetry.hpp -- class-swapping automorphisms: verification, backtracking
// search, and the rare-pair construction they yield.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ucc/bipartite.hpp"
#include "ucc/stable_sets.hpp"

namespace ucc {

// total bijection on V(G), as a forward lookup table over global vertex ids
struct VertexBijection {
    std::vector<int> forward;

    int operator()(int v) const { return forward[static_cast<std::size_t>(v)]; }
    bool operator==(const VertexBijection&) const = default;
};

// edge-preservation biconditional over all vertex pairs
bool is_automorphism(const BipartiteGraph& g, const VertexBijection& f);

// automorphism with f(X) = Y and f(Y) = X
bool is_swap_automorphism(const BipartiteGraph& g, const VertexBijection& f);

enum class SwapSearchOutcome {
    found,
    none_class_size,       // |X| != |Y|
    none_degree_multiset,  // degree multisets of X and Y differ
    none_exhausted,        // backtracking completed empty
};

struct SwapSearchResult {
    SwapSearchOutcome outcome;
    std::optional<VertexBijection> witness;  // set iff outcome == found
    std::uint64_t nodes = 0;

    bool found() const { return outcome == SwapSearchOutcome::found; }
};

struct SearchOptions {
    std::uint64_t node_budget = 20'000'000;
};

// Complete backtracking search for a swap automorphism. Negative outcomes are
// proofs; exceeding the node budget throws instead of guessing.
SwapSearchResult find_swap_automorphism(const BipartiteGraph& g,
                                        const SearchOptions& opts = {});

// Least rare a in X and its image f(a); both verified rare by enumeration.
// Requires is_swap_automorphism(g, f) and at least one edge.
std::pair<int, int> rare_pair_via_swap(const BipartiteGraph& g, const VertexBijection& f,
                                       const EnumOptions& opts = {});

}  // namespace ucc
