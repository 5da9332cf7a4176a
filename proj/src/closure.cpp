#include "ucc/closure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "ucc/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ucc {

namespace {

[[noreturn]] void throw_cap(std::size_t cap) {
    throw ResourceLimitError("union closure exceeded the configured cap of " +
                             std::to_string(cap) + " sets");
}

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

// Reference kernel: repeat "insert s|t for every pair" until no growth.
std::vector<Mask> closure_kernel_serial(const std::vector<Mask>& generators,
                                        std::size_t cap) {
    std::unordered_set<Mask, Bitset128Hash> known;
    known.insert(Mask{});  // the empty union
    for (const Mask& g : generators) known.insert(g);
    if (known.size() > cap) throw_cap(cap);

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> snapshot(known.begin(), known.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                if (known.insert(snapshot[i] | snapshot[j]).second) {
                    grew = true;
                    if (known.size() > cap) throw_cap(cap);
                }
            }
        }
    }
    return sorted_unique({known.begin(), known.end()});
}

// Production kernel: every new set is a union involving at least one frontier
// set, so each round only combines the frontier against everything known.
// Rounds keep the known table frozen, which lets the frontier split across
// threads; each worker dedups its own discoveries before the merge.
std::vector<Mask> closure_kernel_parallel(const std::vector<Mask>& generators,
                                          std::size_t cap) {
    std::vector<Mask> all;
    std::unordered_set<Mask, Bitset128Hash> known;
    auto add = [&](Mask m) {
        if (known.insert(m).second) all.push_back(m);
    };
    add(Mask{});
    for (const Mask& g : generators) add(g);
    if (all.size() > cap) throw_cap(cap);

    std::size_t frontier_begin = 0;
    while (frontier_begin < all.size()) {
        const std::size_t frontier_end = all.size();
        std::vector<Mask> fresh;

#ifdef _OPENMP
#pragma omp parallel
        {
            std::unordered_set<Mask, Bitset128Hash> local;
#pragma omp for schedule(dynamic, 16) nowait
            for (long fi = static_cast<long>(frontier_begin);
                 fi < static_cast<long>(frontier_end); ++fi) {
                const Mask a = all[static_cast<std::size_t>(fi)];
                for (std::size_t j = 0; j < frontier_end; ++j) {
                    Mask u = a | all[j];
                    if (!known.count(u)) local.insert(u);  // known is frozen this round
                }
            }
#pragma omp critical
            fresh.insert(fresh.end(), local.begin(), local.end());
        }
#else
        {
            std::unordered_set<Mask, Bitset128Hash> local;
            for (std::size_t fi = frontier_begin; fi < frontier_end; ++fi) {
                const Mask a = all[fi];
                for (std::size_t j = 0; j < frontier_end; ++j) {
                    Mask u = a | all[j];
                    if (!known.count(u)) local.insert(u);
                }
            }
            fresh.assign(local.begin(), local.end());
        }
#endif

        fresh = sorted_unique(std::move(fresh));
        frontier_begin = frontier_end;
        for (const Mask& m : fresh) {
            add(m);
            if (all.size() > cap) throw_cap(cap);
        }
    }
    return sorted_unique(std::move(all));
}

}  // namespace ucc
