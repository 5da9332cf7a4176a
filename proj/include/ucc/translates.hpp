// translates.hpp -- cyclic-translate families over Z_n, r-suitable indices,
// the anchor-shift operation P_{I,q}, the two explicit swap automorphisms
// (copy-augmented and shifted-family), and the bundled three-way verifier.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ucc/bipartite.hpp"
#include "ucc/set_family.hpp"
#include "ucc/stable_sets.hpp"
#include "ucc/symmetry.hpp"

namespace ucc {

// All k distinct translates of a base tuple over Z_n. Tuple position 0 is the
// anchor (the paper-facing APIs call it position 1); (A+i)(j) = (A(j)+i) mod n.
// Invariant: k divides n and the k members are pairwise distinct as sets.
struct TranslateFamily {
    int modulus = 0;        // n
    std::vector<int> base;  // tuple A: distinct elements of Z_n, anchor first
    int k = 0;

    int copies() const { return modulus / k; }  // n/k, used by the augmented graph
    int tuple_at(int i, int j) const {
        return (base[static_cast<std::size_t>(j)] + i) % modulus;
    }
    std::vector<int> tuple(int i) const;
    Mask member_set(int i) const;
    SetFamily as_family() const;  // indexed, k members, universe n
};

// base tuple = R sorted ascending, rotated so the anchor leads
TranslateFamily cyclic_translates(const std::vector<int>& r_set, int n, int anchor);

struct SuitableIndex {
    int modulus = 0;           // n
    std::vector<int> members;  // I, ascending
    std::map<int, int> q;      // bijection on I
    int r = 0;

    bool contains(int i) const;
    bool operator==(const SuitableIndex&) const = default;
};

struct SuitableCheck {
    bool valid = false;
    int failed_condition = 0;  // 1: I != r-I, 2: r-i != q(r-q(i)); 0 when valid
    int witness = -1;          // offending i, for condition 2
    std::string message;
};

// The two r-suitability conditions, reported without throwing. Malformed q
// (not a bijection I -> I) still throws.
SuitableCheck check_suitable(int n, const std::vector<int>& index_set,
                             const std::map<int, int>& q, int r);

// throwing variant: returns the validated value or raises ValidationError
SuitableIndex validate_suitable(int n, const std::vector<int>& index_set,
                                const std::map<int, int>& q, int r);

// brute force over subsets, bijections and r; n <= 8, |I| <= max_l <= n
std::vector<SuitableIndex> enumerate_suitable(int n, int max_l);

// I = {0..l-1}, q(i) = (i+m) mod l, r = l-1; always validates
SuitableIndex standard_shift_index(int n, int l, int m);

// P_{I,q} applied to a translate family with k = n: member i keeps positions
// 1.. of A+i and, when i is in I, takes its anchor from A+q(i).
struct ShiftedFamily {
    TranslateFamily source;
    SuitableIndex index;
    std::vector<std::vector<int>> tuples;  // n tuples, possibly with a repeated entry

    int modulus() const { return source.modulus; }
    Mask member_set(int i) const;
    SetFamily as_family() const;            // indexed, n members
    std::vector<int> cardinalities() const;  // |member i| as a set
    std::size_t duplicate_members() const;   // index pairs coinciding as sets
};

ShiftedFamily apply_shift(const TranslateFamily& t, const SuitableIndex& s);

// Theorem's explicit map on incidence_graph(sf.as_family()):
// f(a) = member (r + A(1) - a), f(member i) = r + A(1) - i, all mod n.
VertexBijection thm_automorphism(const ShiftedFamily& sf);

// X = Z_n, Y = n/k copies of each translate; copies share neighborhoods, so
// the generated union-closed family is untouched.
BipartiteGraph augmented_incidence_graph(const TranslateFamily& t);

// the explicit map f((A+i)_c) = ck - i, f(a) = (A - a mod k)_{floor(a/k)+1}
VertexBijection prop4_automorphism(const TranslateFamily& t);

struct Section3Report {
    bool automorphism_ok = false;
    UccGraphReport graph;       // graph_satisfies_ucc on the (augmented) incidence graph
    UccReport family;           // verify_ucc on the generated family
    std::vector<int> cardinalities;
    std::size_t duplicate_members = 0;
    bool all_pass() const { return automorphism_ok && graph.satisfied && family.holds; }
};

Section3Report verify_section3(const TranslateFamily& t, const EnumOptions& eopts = {},
                               const ClosureOptions& copts = {});
Section3Report verify_section3(const ShiftedFamily& sf, const EnumOptions& eopts = {},
                               const ClosureOptions& copts = {});

}  // namespace ucc
