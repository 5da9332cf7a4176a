#include "ucc/set_family.hpp"

#include <algorithm>
#include <unordered_set>

namespace ucc {

SetFamily family_from_masks(std::vector<Mask> masks, int universe_size,
                            bool allow_duplicates) {
    if (universe_size < 0)
        throw ArgumentError("universe_size must be nonnegative, got " +
                            std::to_string(universe_size));
    if (universe_size > kMaxUniverse)
        throw ArgumentError("universe_size " + std::to_string(universe_size) +
                            " exceeds the supported width of " +
                            std::to_string(kMaxUniverse));
    const Mask uni = Mask::first_n(universe_size);
    for (const Mask& m : masks)
        if (!m.is_subset_of(uni))
            throw RangeError("set contains an element outside the universe of size " +
                             std::to_string(universe_size));
    if (!allow_duplicates) {
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    }
    return SetFamily{universe_size, allow_duplicates, std::move(masks)};
}

SetFamily make_family(const std::vector<std::vector<int>>& sets, int universe_size,
                      bool allow_duplicates) {
    if (universe_size < 0)
        throw ArgumentError("universe_size must be nonnegative, got " +
                            std::to_string(universe_size));
    std::vector<Mask> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) {
        Mask m;
        for (int e : s) {
            if (e < 0 || e >= universe_size)
                throw RangeError("element " + std::to_string(e) +
                                 " outside universe of size " +
                                 std::to_string(universe_size));
            m.set(e);  // repeated elements collapse
        }
        masks.push_back(m);
    }
    return family_from_masks(std::move(masks), universe_size, allow_duplicates);
}

SetFamily union_closure(const SetFamily& f, const ClosureOptions& opts) {
    std::vector<Mask> closed = opts.parallel
                                   ? closure_kernel_parallel(f.members, opts.cap)
                                   : closure_kernel_serial(f.members, opts.cap);
    return SetFamily{f.universe_size, false, std::move(closed)};
}

std::size_t element_frequency(const SetFamily& f, int x) {
    if (x < 0 || x >= f.universe_size)
        throw RangeError("element " + std::to_string(x) + " outside universe of size " +
                         std::to_string(f.universe_size));
    std::size_t count = 0;
    for (const Mask& m : f.members) count += m.test(x);
    return count;
}

std::vector<int> abundant_elements(const SetFamily& f) {
    std::vector<int> out;
    for (int x = 0; x < f.universe_size; ++x)
        if (2 * element_frequency(f, x) >= f.size()) out.push_back(x);
    return out;
}

bool is_union_closed(const SetFamily& f) {
    std::unordered_set<Mask, Bitset128Hash> have(f.members.begin(), f.members.end());
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i; j < f.members.size(); ++j)
            if (!have.count(f.members[i] | f.members[j])) return false;
    return true;
}

UccReport verify_ucc(const SetFamily& f, const ClosureOptions& opts) {
    SetFamily closed = union_closure(f, opts);
    UccReport rep;
    rep.closure_size = closed.size();
    rep.frequency.resize(static_cast<std::size_t>(f.universe_size));
    for (int x = 0; x < f.universe_size; ++x)
        rep.frequency[static_cast<std::size_t>(x)] = element_frequency(closed, x);
    rep.abundant = abundant_elements(closed);
    rep.vacuous = closed.size() == 1;  // <F> == {empty set}
    rep.holds = rep.vacuous || !rep.abundant.empty();
    return rep;
}

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m.count()));
    while (m.any()) out.push_back(m.pop_lowest());
    return out;
}

std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

}  // namespace ucc
