#include "ucc/graph_zoo.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

std::string coord_label(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// coordinate j of v as character j, so vertex 1 in Q3 reads "100"
std::string cube_label(int v, int d) {
    std::string s(static_cast<std::size_t>(d), '0');
    for (int j = 0; j < d; ++j)
        if (v >> j & 1) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

struct Builder {
    std::vector<std::string> xs, ys;
    std::vector<int> cls, idx;  // per vertex: class and index within class
    std::vector<std::pair<int, int>> edges;

    void add_vertex(int v, bool even, std::string label) {
        if (static_cast<int>(cls.size()) <= v) {
            cls.resize(static_cast<std::size_t>(v) + 1);
            idx.resize(static_cast<std::size_t>(v) + 1);
        }
        cls[static_cast<std::size_t>(v)] = even ? 0 : 1;
        auto& side = even ? xs : ys;
        idx[static_cast<std::size_t>(v)] = static_cast<int>(side.size());
        side.push_back(std::move(label));
    }

    void add_edge(int u, int v) {
        if (cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)])
            throw ArgumentError("internal: edge inside one class");
        if (cls[static_cast<std::size_t>(u)] == 1) std::swap(u, v);
        edges.emplace_back(idx[static_cast<std::size_t>(u)], idx[static_cast<std::size_t>(v)]);
    }

    BipartiteGraph build() { return make_bipartite(std::move(xs), std::move(ys), edges); }
};

void check_product_params(const GridSpec& s) {
    if (s.m < 1 || s.n < 1)
        throw ArgumentError("product graph sides must be positive");
    switch (s.kind) {
        case GridKind::cylinder:
            if (s.m < 3) throw ArgumentError("cycle length m must be at least 3");
            if (s.m % 2 != 0)
                throw ArgumentError("cylinder C_m x P_n is bipartite only when m is even; "
                                    "m = " + std::to_string(s.m) + " is odd");
            break;
        case GridKind::torus:
            if (s.m < 3 || s.n < 3)
                throw ArgumentError("torus cycle lengths must be at least 3");
            if (s.m % 2 != 0 || s.n % 2 != 0)
                throw ArgumentError("torus C_m x C_n is bipartite only when both m and n "
                                    "are even; got m = " + std::to_string(s.m) +
                                    ", n = " + std::to_string(s.n));
            break;
        default:
            break;
    }
}

BipartiteGraph generate_product(const GridSpec& s) {
    check_product_params(s);
    const bool cyc_i = s.kind != GridKind::grid;
    const bool cyc_j = s.kind == GridKind::torus;
    Builder b;
    auto id = [&](int i, int j) { return i * s.n + j; };
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.n; ++j)
            b.add_vertex(id(i, j), (i + j) % 2 == 0, coord_label(i, j));
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.n; ++j) {
            // attach each vertex to its +1 neighbor per coordinate
            if (j + 1 < s.n)
                b.add_edge(id(i, j), id(i, j + 1));
            else if (cyc_j)
                b.add_edge(id(i, j), id(i, 0));
            if (i + 1 < s.m)
                b.add_edge(id(i, j), id(i + 1, j));
            else if (cyc_i)
                b.add_edge(id(i, j), id(0, j));
        }
    return b.build();
}

BipartiteGraph generate_hypercube(int d) {
    if (d < 1) throw ArgumentError("hypercube dimension must be positive");
    if (d > 7) throw ArgumentError("hypercube dimension above 7 exceeds the vertex width");
    Builder b;
    for (int v = 0; v < (1 << d); ++v)
        b.add_vertex(v, std::popcount(static_cast<unsigned>(v)) % 2 == 0, cube_label(v, d));
    for (int v = 0; v < (1 << d); ++v)
        for (int j = 0; j < d; ++j)
            if (!(v >> j & 1)) b.add_edge(v, v | (1 << j));
    return b.build();
}

BipartiteGraph generate_crown(int n) {
    if (n < 2) throw ArgumentError("crown graph needs n >= 2");
    std::vector<std::string> xs, ys;
    for (int i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
    for (int i = 0; i < n; ++i) ys.push_back("y" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, j);
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

BipartiteGraph generate_moebius(int n) {
    // ladder on 2n vertices: cycle 0..2n-1 plus rungs i -- i+n
    if (n < 3) throw ArgumentError("Moebius ladder needs n >= 3 rungs");
    if (n % 2 == 0)
        throw ArgumentError("Moebius ladder with 2n vertices is bipartite only for odd n; "
                            "n = " + std::to_string(n) + " is even");
    Builder b;
    for (int v = 0; v < 2 * n; ++v)
        b.add_vertex(v, v % 2 == 0, "v" + std::to_string(v));
    for (int v = 0; v < 2 * n; ++v) b.add_edge(v, (v + 1) % (2 * n));
    for (int v = 0; v < n; ++v) b.add_edge(v, v + n);
    return b.build();
}

VertexBijection map_by_label(const BipartiteGraph& g,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, int> at;
    for (int v = 0; v < g.vertex_count(); ++v) at[g.labels[static_cast<std::size_t>(v)]] = v;
    VertexBijection f;
    f.forward.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (const auto& [from, to] : pairs) {
        auto a = at.find(from), b = at.find(to);
        if (a == at.end() || b == at.end())
            throw ArgumentError("graph does not carry the generator's labels");
        f.forward[static_cast<std::size_t>(a->second)] = b->second;
    }
    return f;
}

}  // namespace

const char* grid_kind_name(GridKind k) {
    switch (k) {
        case GridKind::grid: return "grid";
        case GridKind::cylinder: return "cylinder";
        case GridKind::torus: return "torus";
        case GridKind::hypercube: return "hypercube";
        case GridKind::crown: return "crown";
        case GridKind::moebius: return "moebius";
    }
    return "?";
}

BipartiteGraph generate(const GridSpec& spec) {
    switch (spec.kind) {
        case GridKind::grid:
        case GridKind::cylinder:
        case GridKind::torus:
            return generate_product(spec);
        case GridKind::hypercube:
            return generate_hypercube(spec.m);
        case GridKind::crown:
            return generate_crown(spec.m);
        case GridKind::moebius:
            return generate_moebius(spec.m);
    }
    throw ArgumentError("unknown graph kind");
}

VertexBijection canonical_swap_map(const GridSpec& spec, const BipartiteGraph& g) {
    std::vector<std::pair<std::string, std::string>> pairs;
    switch (spec.kind) {
        case GridKind::cylinder:
        case GridKind::torus:
            check_product_params(spec);
            // the row shift f(i,j) = ((i+1) mod m, j)
            for (int i = 0; i < spec.m; ++i)
                for (int j = 0; j < spec.n; ++j)
                    pairs.emplace_back(coord_label(i, j), coord_label((i + 1) % spec.m, j));
            break;
        case GridKind::grid: {
            check_product_params(spec);
            if (spec.m % 2 == 0) {
                for (int i = 0; i < spec.m; ++i)
                    for (int j = 0; j < spec.n; ++j)
                        pairs.emplace_back(coord_label(i, j), coord_label(spec.m - 1 - i, j));
            } else if (spec.n % 2 == 0) {
                for (int i = 0; i < spec.m; ++i)
                    for (int j = 0; j < spec.n; ++j)
                        pairs.emplace_back(coord_label(i, j), coord_label(i, spec.n - 1 - j));
            } else {
                throw ArgumentError("grid reflection swaps classes only when a side is even");
            }
            break;
        }
        default:
            throw ArgumentError(std::string("no canonical swap map for kind \"") +
                                grid_kind_name(spec.kind) + "\"; use the automorphism search");
    }
    return map_by_label(g, pairs);
}

DegreeTwoReport degree_two_neighbor_rare_check(const BipartiteGraph& g,
                                               const EnumOptions& opts) {
    DegreeTwoReport rep;
    std::vector<int> deg2;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) deg2.push_back(v);
    rep.degree_two_vertices = deg2.size();
    if (deg2.empty()) return rep;

    RareReport rare = rare_vertices(g, opts);
    for (int v : deg2) {
        Mask nb = g.adj[static_cast<std::size_t>(v)];
        while (nb.any()) {
            int w = nb.pop_lowest();
            ++rep.checked_neighbors;
            if (2 * rare.counts[static_cast<std::size_t>(w)] > rare.total)
                rep.violations.emplace_back(v, w);
        }
    }
    return rep;
}

}  // namespace ucc
