// set_family.hpp -- set families over small universes, union closure,
// element frequency, abundance and brute-force UCC verification.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ucc/bitset128.hpp"
#include "ucc/closure.hpp"
#include "ucc/errors.hpp"

namespace ucc {

constexpr int kMaxUniverse = 128;

// A finite collection of subsets of {0,...,universe_size-1}.
// allow_duplicates=true  : indexed family, insertion order, duplicates kept.
// allow_duplicates=false : set of sets, deduplicated, sorted by bitset value.
struct SetFamily {
    int universe_size = 0;
    bool allow_duplicates = false;
    std::vector<Mask> members;

    std::size_t size() const { return members.size(); }
    Mask universe_mask() const { return Mask::first_n(universe_size); }

    bool operator==(const SetFamily&) const = default;
};

SetFamily make_family(const std::vector<std::vector<int>>& sets, int universe_size,
                      bool allow_duplicates);

// constructor used internally once element masks are already in range;
// applies the same dedup/ordering policy as make_family
SetFamily family_from_masks(std::vector<Mask> masks, int universe_size,
                            bool allow_duplicates);

// <F>: every union of every subcollection of F, including the empty union.
// Result is a set-of-sets family containing the empty set.
SetFamily union_closure(const SetFamily& f, const ClosureOptions& opts = {});

std::size_t element_frequency(const SetFamily& f, int x);

// { x : 2*count(x) >= |F| }, integer arithmetic only ("at least half")
std::vector<int> abundant_elements(const SetFamily& f);

bool is_union_closed(const SetFamily& f);

struct UccReport {
    std::size_t closure_size = 0;
    std::vector<std::size_t> frequency;  // per element of the universe, over <F>
    std::vector<int> abundant;           // abundant elements of <F>
    bool holds = false;                  // <F> == {empty} or abundant nonempty
    bool vacuous = false;                // <F> == {empty}, the excluded degenerate family
};

UccReport verify_ucc(const SetFamily& f, const ClosureOptions& opts = {});

// elements of a mask, ascending
std::vector<int> mask_elements(Mask m);

std::string mask_to_string(Mask m);

}  // namespace ucc
