// sweeps.hpp -- exhaustive and seeded parameter sweeps over small instances:
// the rare<->abundant agreement, edge rarity, the translate construction and
// the shifted-family construction. Expected failure count everywhere: zero.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucc/bipartite.hpp"
#include "ucc/closure.hpp"
#include "ucc/stable_sets.hpp"

namespace ucc {

struct SweepResult {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;  // empty when all checks pass
};

// bipartite graph on nx+ny labeled vertices; bit i*ny+j encodes edge (xi, yj)
BipartiteGraph bipartite_from_bits(int nx, int ny, std::uint64_t bits);

// every adjacency pattern with |X| <= max_x, |Y| <= max_y and min degree >= 1;
// one check per (graph, x in X) pair
SweepResult sweep_prop1(int max_x, int max_y, const EnumOptions& eopts = {},
                        const ClosureOptions& copts = {});

// every edge of every pattern has a rare endpoint
SweepResult sweep_edge_rarity_exhaustive(int max_x, int max_y,
                                         const EnumOptions& eopts = {});
SweepResult sweep_edge_rarity_random(std::size_t count, int max_x, int max_y,
                                     std::uint64_t seed, const EnumOptions& eopts = {});

// all nonempty R over Z_n for n <= max_n: k | n, the explicit copy-augmented
// automorphism verifies, and the generated family satisfies the conjecture
SweepResult sweep_translates(int max_n, const EnumOptions& eopts = {},
                             const ClosureOptions& copts = {});

// for each candidate R with n distinct translates (all of them, or a seeded
// sample of at most sample_cap) and every l in 1..n, m in 0..l-1: the standard
// shift index validates, the theorem's automorphism verifies, and the shifted
// family satisfies the conjecture
SweepResult sweep_shift(int n, const std::optional<std::vector<int>>& fixed_r_set,
                        std::size_t sample_cap, std::uint64_t seed,
                        const EnumOptions& eopts = {}, const ClosureOptions& copts = {});

}  // namespace ucc
