#include "ucc/stable_sets.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "ucc/errors.hpp"
#include "ucc/set_family.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ucc {

namespace {

// Maximal stable sets of G are the maximal cliques of its complement, so this
// runs Bron-Kerbosch with a Tomita pivot over complement adjacency. Branching
// reads: pick a vertex u still uncovered, then every maximal set either keeps
// u excluded via one of its non-neighbors or contains u itself.
struct BkContext {
    std::vector<Mask> cadj;  // complement adjacency, no self loops
    std::size_t cap = 0;
    std::atomic<bool> overflow{false};

    int pivot(Mask p, Mask x) const {
        Mask px = p | x;
        int best = -1, best_cnt = -1;
        while (px.any()) {
            int u = px.pop_lowest();
            int c = (p & cadj[static_cast<std::size_t>(u)]).count();
            if (c > best_cnt) {
                best_cnt = c;
                best = u;
            }
        }
        return best;
    }

    // out gains every maximal set extending r; each set is emitted exactly once
    void expand(Mask r, Mask p, Mask x, std::vector<Mask>& out) {
        if (overflow.load(std::memory_order_relaxed)) return;
        if (p.none() && x.none()) {
            out.push_back(r);
            // a single subtree larger than the whole cap already decides the outcome
            if (out.size() > cap) overflow.store(true, std::memory_order_relaxed);
            return;
        }
        const int u = pivot(p, x);
        Mask ext = p & ~cadj[static_cast<std::size_t>(u)];
        while (ext.any()) {
            int v = ext.pop_lowest();
            const Mask& nv = cadj[static_cast<std::size_t>(v)];
            expand(r | Mask::single(v), p & nv, x & nv, out);
            p.reset(v);
            x.set(v);
        }
    }
};

// ascending bitset-value order; chunks sort in parallel, then fold together
void canonical_sort(std::vector<Mask>& v) {
#ifdef _OPENMP
    const long pieces = std::min<long>(omp_get_max_threads(), 8);
    if (pieces > 1 && v.size() > (std::size_t{1} << 15)) {
        std::vector<std::size_t> cut(static_cast<std::size_t>(pieces) + 1);
        for (long i = 0; i <= pieces; ++i)
            cut[static_cast<std::size_t>(i)] =
                v.size() * static_cast<std::size_t>(i) / static_cast<std::size_t>(pieces);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < pieces; ++i)
            std::sort(v.begin() + static_cast<long>(cut[static_cast<std::size_t>(i)]),
                      v.begin() + static_cast<long>(cut[static_cast<std::size_t>(i) + 1]));
        for (long width = 1; width < pieces; width *= 2)
            for (long i = 0; i + width <= pieces; i += 2 * width) {
                const std::size_t lo = cut[static_cast<std::size_t>(i)];
                const std::size_t mid = cut[static_cast<std::size_t>(i + width)];
                const std::size_t hi = cut[static_cast<std::size_t>(
                    std::min(i + 2 * width, pieces))];
                std::inplace_merge(v.begin() + static_cast<long>(lo),
                                   v.begin() + static_cast<long>(mid),
                                   v.begin() + static_cast<long>(hi));
            }
        return;
    }
#endif
    std::sort(v.begin(), v.end());
}

}  // namespace

StableSetCollection maximal_stable_sets(const BipartiteGraph& g, const EnumOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.vertex_cap)
        throw ResourceLimitError("graph has " + std::to_string(n) +
                                 " vertices, above the enumeration cap of " +
                                 std::to_string(opts.vertex_cap));

    BkContext ctx;
    ctx.cap = opts.set_cap;
    ctx.cadj.resize(static_cast<std::size_t>(n));
    const Mask all = Mask::first_n(n);
    for (int v = 0; v < n; ++v)
        ctx.cadj[static_cast<std::size_t>(v)] =
            all & ~g.adj[static_cast<std::size_t>(v)] & ~Mask::single(v);

    std::vector<Mask> sets;
    if (n == 0) {
        sets.push_back(Mask{});  // the empty set is the unique maximal stable set
    } else {
        // unroll the first level so independent branches can run in parallel
        struct Branch {
            int v;
            Mask p, x;
        };
        std::vector<Branch> branches;
        {
            Mask p = all, x;
            const int u = ctx.pivot(p, x);
            Mask ext = p & ~ctx.cadj[static_cast<std::size_t>(u)];
            while (ext.any()) {
                int v = ext.pop_lowest();
                branches.push_back({v, p, x});
                p.reset(v);
                x.set(v);
            }
        }

        std::vector<std::vector<Mask>> partial(branches.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
        for (long bi = 0; bi < static_cast<long>(branches.size()); ++bi) {
            const Branch& b = branches[static_cast<std::size_t>(bi)];
            const Mask& nv = ctx.cadj[static_cast<std::size_t>(b.v)];
            ctx.expand(Mask::single(b.v), b.p & nv, b.x & nv,
                       partial[static_cast<std::size_t>(bi)]);
        }

        std::size_t total = 0;
        for (const auto& part : partial) total += part.size();
        if (total > opts.set_cap || ctx.overflow.load())
            throw ResourceLimitError("maximal-stable-set enumeration exceeded the cap of " +
                                     std::to_string(opts.set_cap) + " sets");
        sets.reserve(total);
        for (auto& part : partial) sets.insert(sets.end(), part.begin(), part.end());
    }

    canonical_sort(sets);

    StableSetCollection out;
    out.counts.assign(static_cast<std::size_t>(n), 0);
    for (const Mask& s : sets) {
        Mask m = s;
        while (m.any()) ++out.counts[static_cast<std::size_t>(m.pop_lowest())];
    }
    out.sets = std::move(sets);
    return out;
}

RareReport rare_vertices(const BipartiteGraph& g, const EnumOptions& opts) {
    if (g.vertex_count() == 0)
        throw ArgumentError("rare_vertices requires at least one vertex");
    StableSetCollection c = maximal_stable_sets(g, opts);
    RareReport rep;
    rep.total = c.total();
    rep.counts = c.counts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (2 * c.counts[static_cast<std::size_t>(v)] > rep.total) continue;
        (g.is_x(v) ? rep.rare_x : rep.rare_y).push_back(v);
    }
    return rep;
}

UccGraphReport graph_satisfies_ucc(const BipartiteGraph& g, const EnumOptions& opts) {
    if (g.edge_count() == 0)
        throw ArgumentError("the graph formulation requires at least one edge");
    RareReport rare = rare_vertices(g, opts);
    UccGraphReport rep;
    rep.total_sets = rare.total;
    rep.satisfied = !rare.rare_x.empty() && !rare.rare_y.empty();
    if (rep.satisfied) {
        rep.witness_x = rare.rare_x.front();
        rep.witness_y = rare.rare_y.front();
    }
    return rep;
}

Prop1Report check_prop1(const BipartiteGraph& g, int x, const EnumOptions& opts,
                        const ClosureOptions& copts) {
    if (x < 0 || x >= g.nx)
        throw ArgumentError("vertex " + std::to_string(x) + " is not in class X");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw ArgumentError("vertex \"" + g.labels[static_cast<std::size_t>(v)] +
                                "\" is isolated; the rare<->abundant check needs "
                                "minimum degree 1");

    Prop1Report rep;
    StableSetCollection c = maximal_stable_sets(g, opts);
    rep.stable_total = c.total();
    rep.stable_count = c.counts[static_cast<std::size_t>(x)];
    rep.rare = 2 * rep.stable_count <= rep.stable_total;

    SetFamily closure = union_closure(incidence_family(g, Side::X), copts);
    rep.closure_size = closure.size();
    rep.closure_count = element_frequency(closure, x);
    rep.abundant = 2 * rep.closure_count >= rep.closure_size;

    rep.agrees = rep.rare == rep.abundant;
    return rep;
}

}  // namespace ucc
