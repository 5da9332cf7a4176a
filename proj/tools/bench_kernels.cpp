// bench_kernels -- compares the production kernels against their serial
// references on fixed seeded workloads and checks that the results agree.
//
//   closure: plain pairwise fixpoint vs the frontier kernel (OpenMP)
//   stable sets: 2^V brute force / single-branch run vs parallel branches
//
// Run with --quick for the CI-sized workload.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ucc/bipartite.hpp"
#include "ucc/closure.hpp"
#include "ucc/set_family.hpp"
#include "ucc/stable_sets.hpp"

using namespace ucc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Mask> random_generators(std::mt19937_64& rng, int universe, int count,
                                    int bits_per_set) {
    std::vector<Mask> out;
    for (int i = 0; i < count; ++i) {
        Mask m;
        for (int b = 0; b < bits_per_set; ++b)
            m.set(static_cast<int>(rng() % static_cast<std::uint64_t>(universe)));
        out.push_back(m);
    }
    return out;
}

BipartiteGraph random_graph(std::mt19937_64& rng, int nx, int ny, int percent) {
    std::vector<std::string> xs, ys;
    for (int i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
    for (int j = 0; j < ny; ++j) ys.push_back("y" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(i, j);
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

// 2^V reference, only sensible for small graphs
std::vector<Mask> stable_bruteforce(const BipartiteGraph& g) {
    std::vector<Mask> out;
    const int n = g.vertex_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Mask s{bits, 0};
        bool stable = true;
        for (int v = 0; v < n && stable; ++v)
            if (s.test(v) && s.intersects(g.adj[static_cast<std::size_t>(v)])) stable = false;
        if (!stable) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!s.test(v) && !s.intersects(g.adj[static_cast<std::size_t>(v)]))
                maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name,
                serial_s, parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

    std::mt19937_64 rng(20240811);
    int bad = 0;

    {
        // closure: enough generators that the closed family reaches ~10^4..10^5
        const int universe = quick ? 18 : 24;
        const int count = quick ? 12 : 17;
        std::vector<Mask> gens = random_generators(rng, universe, count, 3);

        auto t0 = std::chrono::steady_clock::now();
        std::vector<Mask> serial = closure_kernel_serial(gens);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::vector<Mask> parallel = closure_kernel_parallel(gens);
        const double tp = seconds_since(t0);

        const bool equal = serial == parallel;
        bad += !equal;
        std::printf("closure size %zu\n", serial.size());
        report("union closure", ts, tp, equal);
    }

    {
        // stable sets, small graph: brute force vs the branching enumerator
        BipartiteGraph g = random_graph(rng, 8, 8, 30);
        auto t0 = std::chrono::steady_clock::now();
        std::vector<Mask> brute = stable_bruteforce(g);
        const double tb = seconds_since(t0);

        EnumOptions opts;
        t0 = std::chrono::steady_clock::now();
        StableSetCollection c = maximal_stable_sets(g, opts);
        const double te = seconds_since(t0);

        const bool equal = brute == c.sets;
        bad += !equal;
        std::printf("stable sets (8+8): %zu\n", c.total());
        report("2^V brute force vs enumerator", tb, te, equal);
    }

    {
        // stable sets, larger sparse graph: branch-serial vs branch-parallel
        const int side = quick ? 14 : 19;
        BipartiteGraph g = random_graph(rng, side, side, quick ? 18 : 14);
        EnumOptions serial_opts, parallel_opts;
        serial_opts.parallel = false;
        serial_opts.vertex_cap = parallel_opts.vertex_cap = 2 * side;
        serial_opts.set_cap = parallel_opts.set_cap = std::size_t{1} << 26;

        auto t0 = std::chrono::steady_clock::now();
        StableSetCollection s = maximal_stable_sets(g, serial_opts);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        StableSetCollection p = maximal_stable_sets(g, parallel_opts);
        const double tp = seconds_since(t0);

        const bool equal = s.sets == p.sets && s.counts == p.counts;
        bad += !equal;
        std::printf("stable sets (%d+%d): %zu\n", side, side, s.total());
        report("stable-set enumeration", ts, tp, equal);
    }

    if (bad) std::printf("%d kernel comparison(s) FAILED\n", bad);
    return bad == 0 ? 0 : 1;
}
