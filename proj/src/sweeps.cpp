#include "ucc/sweeps.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ucc/errors.hpp"
#include "ucc/set_family.hpp"
#include "ucc/symmetry.hpp"
#include "ucc/translates.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ucc {

namespace {

void record_failure(SweepResult& res, const std::string& what) {
#ifdef _OPENMP
#pragma omp critical(sweep_failure)
#endif
    {
        ++res.failures;
        if (res.first_failure.empty()) res.first_failure = what;
    }
}

bool min_degree_positive(int nx, int ny, std::uint64_t bits) {
    for (int i = 0; i < nx; ++i) {
        bool any = false;
        for (int j = 0; j < ny; ++j) any |= bits >> (i * ny + j) & 1;
        if (!any) return false;
    }
    for (int j = 0; j < ny; ++j) {
        bool any = false;
        for (int i = 0; i < nx; ++i) any |= bits >> (i * ny + j) & 1;
        if (!any) return false;
    }
    return true;
}

}  // namespace

BipartiteGraph bipartite_from_bits(int nx, int ny, std::uint64_t bits) {
    std::vector<std::string> xs, ys;
    for (int i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
    for (int j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (bits >> (i * ny + j) & 1) edges.emplace_back(i, j);
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

SweepResult sweep_prop1(int max_x, int max_y, const EnumOptions& eopts,
                        const ClosureOptions& copts) {
    SweepResult res;
    for (int nx = 1; nx <= max_x; ++nx)
        for (int ny = 1; ny <= max_y; ++ny) {
            const long patterns = 1l << (nx * ny);
            std::size_t instances = 0, checks = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : instances, checks)
#endif
            for (long bits = 0; bits < patterns; ++bits) {
                if (!min_degree_positive(nx, ny, static_cast<std::uint64_t>(bits))) continue;
                BipartiteGraph g =
                    bipartite_from_bits(nx, ny, static_cast<std::uint64_t>(bits));
                ++instances;
                for (int x = 0; x < nx; ++x) {
                    ++checks;
                    if (!check_prop1(g, x, eopts, copts).agrees) {
                        std::ostringstream what;
                        what << "prop1 disagreement at nx=" << nx << " ny=" << ny
                             << " bits=" << bits << " x=" << x;
                        record_failure(res, what.str());
                    }
                }
            }
            res.instances += instances;
            res.checks += checks;
        }
    return res;
}

namespace {

void edge_rarity_one(const BipartiteGraph& g, const EnumOptions& eopts, SweepResult& res,
                     std::size_t& checks, const std::string& tag) {
    if (g.edge_count() == 0) return;  // vacuous
    StableSetCollection c = maximal_stable_sets(g, eopts);
    for (int x = 0; x < g.nx; ++x) {
        Mask nb = g.adj[static_cast<std::size_t>(x)];
        while (nb.any()) {
            int y = nb.pop_lowest();
            ++checks;
            const bool x_rare = 2 * c.counts[static_cast<std::size_t>(x)] <= c.total();
            const bool y_rare = 2 * c.counts[static_cast<std::size_t>(y)] <= c.total();
            if (!x_rare && !y_rare)
                record_failure(res, "edge (" + g.labels[static_cast<std::size_t>(x)] + "," +
                                        g.labels[static_cast<std::size_t>(y)] +
                                        ") has no rare endpoint at " + tag);
        }
    }
}

}  // namespace

SweepResult sweep_edge_rarity_exhaustive(int max_x, int max_y, const EnumOptions& eopts) {
    SweepResult res;
    for (int nx = 1; nx <= max_x; ++nx)
        for (int ny = 1; ny <= max_y; ++ny) {
            const long patterns = 1l << (nx * ny);
            std::size_t instances = 0, checks = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : instances, checks)
#endif
            for (long bits = 0; bits < patterns; ++bits) {
                BipartiteGraph g =
                    bipartite_from_bits(nx, ny, static_cast<std::uint64_t>(bits));
                ++instances;
                std::ostringstream tag;
                tag << "nx=" << nx << " ny=" << ny << " bits=" << bits;
                edge_rarity_one(g, eopts, res, checks, tag.str());
            }
            res.instances += instances;
            res.checks += checks;
        }
    return res;
}

SweepResult sweep_edge_rarity_random(std::size_t count, int max_x, int max_y,
                                     std::uint64_t seed, const EnumOptions& eopts) {
    // draw every instance up front so the sample is schedule-independent
    struct Inst {
        int nx, ny;
        std::uint64_t bits;
    };
    std::vector<Inst> insts;
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < count; ++c) {
        Inst in;
        in.nx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_x));
        in.ny = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_y));
        in.bits = rng() & ((std::uint64_t{1} << (in.nx * in.ny)) - 1);
        insts.push_back(in);
    }

    SweepResult res;
    res.instances = insts.size();
    std::size_t checks = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : checks)
#endif
    for (long i = 0; i < static_cast<long>(insts.size()); ++i) {
        const Inst& in = insts[static_cast<std::size_t>(i)];
        BipartiteGraph g = bipartite_from_bits(in.nx, in.ny, in.bits);
        std::ostringstream tag;
        tag << "seeded instance " << i << " (nx=" << in.nx << " ny=" << in.ny
            << " bits=" << in.bits << ")";
        edge_rarity_one(g, eopts, res, checks, tag.str());
    }
    res.checks = checks;
    return res;
}

SweepResult sweep_translates(int max_n, const EnumOptions& eopts,
                             const ClosureOptions& copts) {
    SweepResult res;
    for (int n = 1; n <= max_n; ++n) {
        const long patterns = 1l << n;
        std::size_t instances = 0, checks = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : instances, checks)
#endif
        for (long bits = 1; bits < patterns; ++bits) {
            std::vector<int> r_set;
            for (int e = 0; e < n; ++e)
                if (bits >> e & 1) r_set.push_back(e);
            TranslateFamily t = cyclic_translates(r_set, n, r_set.front());
            ++instances;
            std::ostringstream tag;
            tag << "n=" << n << " R bits=" << bits;

            ++checks;
            if (n % t.k != 0) record_failure(res, "k does not divide n at " + tag.str());
            ++checks;
            if (!is_swap_automorphism(augmented_incidence_graph(t), prop4_automorphism(t)))
                record_failure(res, "augmented automorphism fails at " + tag.str());
            ++checks;
            if (!verify_ucc(t.as_family(), copts).holds)
                record_failure(res, "translate closure not abundant at " + tag.str());
        }
        res.instances += instances;
        res.checks += checks;
    }
    (void)eopts;
    return res;
}

SweepResult sweep_shift(int n, const std::optional<std::vector<int>>& fixed_r_set,
                        std::size_t sample_cap, std::uint64_t seed,
                        const EnumOptions& eopts, const ClosureOptions& copts) {
    std::vector<std::vector<int>> candidates;
    if (fixed_r_set) {
        candidates.push_back(*fixed_r_set);
    } else {
        for (long bits = 1; bits < (1l << n); ++bits) {
            std::vector<int> r_set;
            for (int e = 0; e < n; ++e)
                if (bits >> e & 1) r_set.push_back(e);
            if (cyclic_translates(r_set, n, r_set.front()).k == n)
                candidates.push_back(std::move(r_set));
        }
        if (candidates.size() > sample_cap) {
            std::mt19937_64 rng(seed);
            std::shuffle(candidates.begin(), candidates.end(), rng);
            candidates.resize(sample_cap);
            std::sort(candidates.begin(), candidates.end());
        }
    }

    SweepResult res;
    std::size_t instances = 0, checks = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : instances, checks)
#endif
    for (long ci = 0; ci < static_cast<long>(candidates.size()); ++ci) {
        const std::vector<int>& r_set = candidates[static_cast<std::size_t>(ci)];
        TranslateFamily t = cyclic_translates(r_set, n, r_set.front());
        if (t.k != n) {
            record_failure(res, "candidate set does not have n distinct translates");
            continue;
        }
        for (int l = 1; l <= n; ++l)
            for (int m = 0; m < l; ++m) {
                ++instances;
                std::ostringstream tag;
                tag << "n=" << n << " R={";
                for (std::size_t e = 0; e < r_set.size(); ++e)
                    tag << (e ? "," : "") << r_set[e];
                tag << "} l=" << l << " m=" << m;

                SuitableIndex s;
                ++checks;
                try {
                    s = standard_shift_index(n, l, m);
                } catch (const Error& err) {
                    record_failure(res, std::string("standard index rejected at ") +
                                            tag.str() + ": " + err.what());
                    continue;
                }
                ShiftedFamily sf = apply_shift(t, s);
                ++checks;
                if (!is_swap_automorphism(incidence_graph(sf.as_family()),
                                          thm_automorphism(sf)))
                    record_failure(res, "shift automorphism fails at " + tag.str());
                ++checks;
                if (!verify_ucc(sf.as_family(), copts).holds)
                    record_failure(res, "shifted closure not abundant at " + tag.str());
            }
    }
    res.instances = instances;
    res.checks = checks;
    (void)eopts;
    return res;
}

}  // namespace ucc
