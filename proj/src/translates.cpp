#include "ucc/translates.hpp"

#include <algorithm>

#include "ucc/errors.hpp"

namespace ucc {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Mask set_of(const std::vector<int>& elems) {
    Mask m;
    for (int e : elems) m.set(e);
    return m;
}

}  // namespace

std::vector<int> TranslateFamily::tuple(int i) const {
    std::vector<int> t;
    t.reserve(base.size());
    for (std::size_t j = 0; j < base.size(); ++j)
        t.push_back(tuple_at(i, static_cast<int>(j)));
    return t;
}

Mask TranslateFamily::member_set(int i) const { return set_of(tuple(i)); }

SetFamily TranslateFamily::as_family() const {
    std::vector<Mask> members;
    members.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) members.push_back(member_set(i));
    return family_from_masks(std::move(members), modulus, /*allow_duplicates=*/true);
}

TranslateFamily cyclic_translates(const std::vector<int>& r_set, int n, int anchor) {
    if (n < 1) throw ArgumentError("modulus must be positive");
    if (n > kMaxUniverse)
        throw ArgumentError("modulus " + std::to_string(n) + " exceeds the supported width");
    if (r_set.empty()) throw ArgumentError("the base set must be nonempty");
    for (int e : r_set)
        if (e < 0 || e >= n)
            throw RangeError("element " + std::to_string(e) + " is not in Z_" +
                             std::to_string(n));

    std::vector<int> sorted = r_set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto pos = std::find(sorted.begin(), sorted.end(), anchor);
    if (pos == sorted.end())
        throw ArgumentError("anchor " + std::to_string(anchor) + " is not in the base set");
    std::rotate(sorted.begin(), pos, sorted.end());

    TranslateFamily t;
    t.modulus = n;
    t.base = std::move(sorted);

    // k = the least positive period of R under translation; divides n
    const Mask r_mask = set_of(t.base);
    for (int p = 1; p <= n; ++p) {
        Mask shifted;
        for (int e : t.base) shifted.set(mod(e + p, n));
        if (shifted == r_mask) {
            t.k = p;
            break;
        }
    }
    return t;
}

bool SuitableIndex::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

SuitableCheck check_suitable(int n, const std::vector<int>& index_set,
                             const std::map<int, int>& q, int r) {
    if (n < 1) throw ArgumentError("modulus must be positive");
    std::vector<int> I = index_set;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I)
        if (i < 0 || i >= n)
            throw RangeError("index " + std::to_string(i) + " is not in Z_" +
                             std::to_string(n));
    if (r < 0 || r >= n)
        throw RangeError("r = " + std::to_string(r) + " is not in Z_" + std::to_string(n));

    // q must be a bijection I -> I
    if (q.size() != I.size())
        throw ArgumentError("q must be defined on exactly the index set");
    std::vector<int> image;
    for (int i : I) {
        auto it = q.find(i);
        if (it == q.end())
            throw ArgumentError("q is undefined at " + std::to_string(i));
        image.push_back(it->second);
    }
    std::sort(image.begin(), image.end());
    if (image != I) throw ArgumentError("q is not a bijection of the index set onto itself");

    SuitableCheck out;
    // condition 1: I = r - I
    std::vector<int> reflected;
    for (int i : I) reflected.push_back(mod(r - i, n));
    std::sort(reflected.begin(), reflected.end());
    if (reflected != I) {
        out.failed_condition = 1;
        out.message = "condition 1 fails: r - I != I";
        return out;
    }
    // condition 2: r - i = q(r - q(i)) for all i in I
    for (int i : I) {
        const int inner = mod(r - q.at(i), n);  // in I by condition 1
        if (mod(r - i, n) != q.at(inner)) {
            out.failed_condition = 2;
            out.witness = i;
            out.message = "condition 2 fails at i = " + std::to_string(i) +
                          ": r - i = " + std::to_string(mod(r - i, n)) +
                          " but q(r - q(i)) = " + std::to_string(q.at(inner));
            return out;
        }
    }
    out.valid = true;
    return out;
}

SuitableIndex validate_suitable(int n, const std::vector<int>& index_set,
                                const std::map<int, int>& q, int r) {
    SuitableCheck c = check_suitable(n, index_set, q, r);
    if (!c.valid) throw ValidationError(c.message);
    SuitableIndex s;
    s.modulus = n;
    s.members = index_set;
    std::sort(s.members.begin(), s.members.end());
    s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
    s.q = q;
    s.r = r;
    return s;
}

std::vector<SuitableIndex> enumerate_suitable(int n, int max_l) {
    if (n < 1 || n > 8)
        throw ResourceLimitError("exhaustive suitable-index enumeration is limited to n <= 8");
    if (max_l < 0 || max_l > n)
        throw ResourceLimitError("max_l must lie in 0..n");

    std::vector<SuitableIndex> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> I;
        for (int i = 0; i < n; ++i)
            if (bits >> i & 1) I.push_back(i);
        if (static_cast<int>(I.size()) > max_l) continue;

        std::vector<int> image = I;  // iterate all bijections I -> I
        std::sort(image.begin(), image.end());
        do {
            std::map<int, int> q;
            for (std::size_t j = 0; j < I.size(); ++j) q[I[j]] = image[j];
            for (int r = 0; r < n; ++r) {
                SuitableCheck c = check_suitable(n, I, q, r);
                if (c.valid) out.push_back(SuitableIndex{n, I, q, r});
            }
        } while (std::next_permutation(image.begin(), image.end()));
    }
    return out;
}

SuitableIndex standard_shift_index(int n, int l, int m) {
    if (l < 1 || l > n)
        throw ArgumentError("l must lie in 1..n, got " + std::to_string(l));
    if (m < 0 || m >= n)
        throw ArgumentError("m must lie in 0..n-1, got " + std::to_string(m));
    std::vector<int> I(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) I[static_cast<std::size_t>(i)] = i;
    std::map<int, int> q;
    for (int i = 0; i < l; ++i) q[i] = (i + m) % l;
    return validate_suitable(n, I, q, l - 1);
}

Mask ShiftedFamily::member_set(int i) const {
    return set_of(tuples[static_cast<std::size_t>(i)]);
}

SetFamily ShiftedFamily::as_family() const {
    std::vector<Mask> members;
    members.reserve(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i)
        members.push_back(member_set(static_cast<int>(i)));
    return family_from_masks(std::move(members), modulus(), /*allow_duplicates=*/true);
}

std::vector<int> ShiftedFamily::cardinalities() const {
    std::vector<int> out;
    out.reserve(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i)
        out.push_back(member_set(static_cast<int>(i)).count());
    return out;
}

std::size_t ShiftedFamily::duplicate_members() const {
    std::vector<Mask> sets;
    sets.reserve(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i)
        sets.push_back(member_set(static_cast<int>(i)));
    std::sort(sets.begin(), sets.end());
    std::size_t dup = 0;
    for (std::size_t i = 1; i < sets.size(); ++i)
        if (sets[i] == sets[i - 1]) ++dup;
    return dup;
}

ShiftedFamily apply_shift(const TranslateFamily& t, const SuitableIndex& s) {
    if (t.k != t.modulus)
        throw ArgumentError("the shift needs all n translates distinct (k = " +
                            std::to_string(t.k) + ", n = " + std::to_string(t.modulus) + ")");
    if (s.modulus != t.modulus)
        throw ArgumentError("suitable index is over Z_" + std::to_string(s.modulus) +
                            ", family over Z_" + std::to_string(t.modulus));
    ShiftedFamily sf;
    sf.source = t;
    sf.index = s;
    const int n = t.modulus;
    sf.tuples.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> tup = t.tuple(i);
        if (s.contains(i)) tup[0] = t.tuple_at(s.q.at(i), 0);
        sf.tuples.push_back(std::move(tup));
    }
    return sf;
}

VertexBijection thm_automorphism(const ShiftedFamily& sf) {
    const int n = sf.modulus();
    const int anchor = sf.source.base[0];  // A(1)
    const int r = sf.index.r;
    VertexBijection f;
    f.forward.resize(static_cast<std::size_t>(2 * n));
    for (int a = 0; a < n; ++a)
        f.forward[static_cast<std::size_t>(a)] = n + mod(r + anchor - a, n);
    for (int i = 0; i < n; ++i)
        f.forward[static_cast<std::size_t>(n + i)] = mod(r + anchor - i, n);
    return f;
}

BipartiteGraph augmented_incidence_graph(const TranslateFamily& t) {
    const int n = t.modulus;
    const int copies = t.copies();
    std::vector<std::string> xs, ys;
    for (int e = 0; e < n; ++e) xs.push_back(std::to_string(e));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t.k; ++i) {
        const std::vector<int> elems = mask_elements(t.member_set(i));
        for (int c = 1; c <= copies; ++c) {
            const int yj = i * copies + (c - 1);
            // with one copy per translate this is exactly the incidence graph
            ys.push_back(copies == 1 ? "S" + std::to_string(i)
                                     : "S" + std::to_string(i) + "_" + std::to_string(c));
            for (int e : elems) edges.emplace_back(e, yj);
        }
    }
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

VertexBijection prop4_automorphism(const TranslateFamily& t) {
    const int n = t.modulus;
    const int k = t.k;
    const int copies = t.copies();
    VertexBijection f;
    f.forward.resize(static_cast<std::size_t>(2 * n));
    // X vertex a goes to copy floor(a/k)+1 of translate A - (a mod k)
    for (int a = 0; a < n; ++a) {
        const int a_d = a / k;
        const int a_r = a % k;
        const int i = (k - a_r) % k;
        f.forward[static_cast<std::size_t>(a)] = n + i * copies + a_d;
    }
    // Y vertex (A+i)_c goes to ck - i mod n
    for (int i = 0; i < k; ++i)
        for (int c = 1; c <= copies; ++c)
            f.forward[static_cast<std::size_t>(n + i * copies + (c - 1))] = mod(c * k - i, n);
    return f;
}

namespace {

Section3Report bundle(bool automorphism_ok, const BipartiteGraph& g, const SetFamily& fam,
                      std::vector<int> cards, std::size_t dups, const EnumOptions& eopts,
                      const ClosureOptions& copts) {
    Section3Report rep;
    rep.automorphism_ok = automorphism_ok;
    rep.graph = graph_satisfies_ucc(g, eopts);
    rep.family = verify_ucc(fam, copts);
    rep.cardinalities = std::move(cards);
    rep.duplicate_members = dups;
    return rep;
}

}  // namespace

Section3Report verify_section3(const TranslateFamily& t, const EnumOptions& eopts,
                               const ClosureOptions& copts) {
    BipartiteGraph g = augmented_incidence_graph(t);
    const bool auto_ok = is_swap_automorphism(g, prop4_automorphism(t));
    std::vector<int> cards;
    for (int i = 0; i < t.k; ++i) cards.push_back(t.member_set(i).count());
    return bundle(auto_ok, g, t.as_family(), std::move(cards), 0, eopts, copts);
}

Section3Report verify_section3(const ShiftedFamily& sf, const EnumOptions& eopts,
                               const ClosureOptions& copts) {
    BipartiteGraph g = incidence_graph(sf.as_family());
    const bool auto_ok = is_swap_automorphism(g, thm_automorphism(sf));
    return bundle(auto_ok, g, sf.as_family(), sf.cardinalities(), sf.duplicate_members(),
                  eopts, copts);
}

}  // namespace ucc
