// ucc-lab -- command-line front end: family construction and verification,
// graph generation and checks, and the exhaustive sweeps.
//
// Exit codes: 0 verified positive, 1 verified negative, 2 usage or argument
// error, 3 resource limit (cap or budget) exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ucc/errors.hpp"
#include "ucc/graph_zoo.hpp"
#include "ucc/io.hpp"
#include "ucc/set_family.hpp"
#include "ucc/stable_sets.hpp"
#include "ucc/sweeps.hpp"
#include "ucc/symmetry.hpp"
#include "ucc/translates.hpp"

using nlohmann::json;
using namespace ucc;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string format = "text";
    std::size_t closure_cap = kDefaultClosureCap;
    int vertex_cap = 40;
    std::size_t set_cap = std::size_t{1} << 22;
    std::uint64_t budget = 20'000'000;
    bool deterministic = false;

    ClosureOptions closure_opts() const { return {closure_cap, !deterministic}; }
    EnumOptions enum_opts() const { return {vertex_cap, set_cap, !deterministic}; }
    SearchOptions search_opts() const { return {budget}; }
    bool json_out() const { return format == "json"; }
};

std::string read_stream(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw ArgumentError("cannot open input file \"" + path + "\"");
    return read_stream(f);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ArgumentError("cannot open output file \"" + path + "\"");
    f << payload;
}

FamilyDoc load_family(const std::string& path, std::optional<int> universe,
                      std::optional<bool> one_based) {
    std::istringstream in(read_input(path));
    return read_family(in, universe, one_based);
}

BipartiteGraph load_graph(const std::string& path) {
    std::istringstream in(read_input(path));
    return read_graph(in);
}

std::string emit_family(const FamilyDoc& doc, bool as_json) {
    return as_json ? family_to_json(doc).dump(2) + "\n" : family_to_text(doc);
}

std::string label_list(const BipartiteGraph& g, const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += " ";
        out += g.labels[static_cast<std::size_t>(vs[i])];
    }
    return out;
}

TranslateFamily translates_from_provenance(const FamilyDoc& doc) {
    return cyclic_translates(*doc.translate_base, doc.family.universe_size,
                             *doc.translate_anchor);
}

// builds the translate structure a family document describes; validates that
// the document really lists the translates of its base in index order
TranslateFamily rebuild_translates(const FamilyDoc& doc, std::optional<int> anchor_label) {
    const SetFamily& fam = doc.family;
    if (fam.size() == 0) throw ArgumentError("the family is empty");
    const int n = fam.universe_size;

    std::vector<int> base = doc.translate_base ? *doc.translate_base
                                               : mask_elements(fam.members[0]);
    int anchor;
    if (anchor_label)
        anchor = internal_element(*anchor_label, n, doc.one_based);
    else if (doc.translate_anchor)
        anchor = *doc.translate_anchor;
    else {
        std::vector<int> labels;
        for (int e : base) labels.push_back(display_label(e, n, doc.one_based));
        anchor = internal_element(*std::min_element(labels.begin(), labels.end()), n,
                                  doc.one_based);
    }

    TranslateFamily t = cyclic_translates(base, n, anchor);
    if (static_cast<std::size_t>(t.k) != fam.size())
        throw ArgumentError("family has " + std::to_string(fam.size()) +
                            " members but its base set has " + std::to_string(t.k) +
                            " distinct translates");
    for (int i = 0; i < t.k; ++i)
        if (t.member_set(i) != fam.members[static_cast<std::size_t>(i)])
            throw ArgumentError("member " + std::to_string(i) + " is not translate +" +
                                std::to_string(i) +
                                " of the base set; the input is not a translate family "
                                "in index order");
    return t;
}

void print_ucc_report(const UccReport& rep, int universe, bool one_based, bool as_json,
                      const char* command) {
    std::vector<int> abundant;
    for (int e : rep.abundant) abundant.push_back(display_label(e, universe, one_based));
    std::sort(abundant.begin(), abundant.end());
    std::vector<std::pair<int, std::size_t>> freq;
    for (int e = 0; e < universe; ++e)
        freq.emplace_back(display_label(e, universe, one_based),
                          rep.frequency[static_cast<std::size_t>(e)]);
    std::sort(freq.begin(), freq.end());

    if (as_json) {
        json jf = json::object();
        for (const auto& [label, count] : freq) jf[std::to_string(label)] = count;
        json j{{"command", command},      {"closure_size", rep.closure_size},
               {"frequencies", std::move(jf)}, {"abundant", abundant},
               {"holds", rep.holds},      {"vacuous", rep.vacuous}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "closure size: " << rep.closure_size << "\n";
    std::cout << "frequencies:";
    for (const auto& [label, count] : freq) std::cout << " " << label << ":" << count;
    std::cout << "\nabundant:";
    for (int label : abundant) std::cout << " " << label;
    std::cout << "\nholds: " << (rep.holds ? "yes" : "no")
              << (rep.vacuous ? " (vacuous: the closure is {empty set} alone)" : "") << "\n";
}

int print_section3(const Section3Report& rep, int universe, bool one_based, bool as_json) {
    if (as_json) {
        std::vector<int> abundant;
        for (int e : rep.family.abundant)
            abundant.push_back(display_label(e, universe, one_based));
        std::sort(abundant.begin(), abundant.end());
        json j{{"command", "family verify --full"},
               {"automorphism_ok", rep.automorphism_ok},
               {"graph_satisfied", rep.graph.satisfied},
               {"graph_total_stable_sets", rep.graph.total_sets},
               {"cardinalities", rep.cardinalities},
               {"duplicate_members", rep.duplicate_members},
               {"family",
                {{"closure_size", rep.family.closure_size},
                 {"abundant", abundant},
                 {"holds", rep.family.holds}}},
               {"all_pass", rep.all_pass()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "explicit automorphism: "
                  << (rep.automorphism_ok ? "verified" : "FAILED") << "\n";
        std::cout << "graph check: "
                  << (rep.graph.satisfied ? "rare vertex in each class" : "FAILED") << " ("
                  << rep.graph.total_sets << " maximal stable sets)\n";
        std::cout << "family check: " << (rep.family.holds ? "holds" : "FAILED")
                  << " (closure " << rep.family.closure_size << ", "
                  << rep.family.abundant.size() << " abundant element(s))\n";
        std::cout << "member cardinalities:";
        for (int c : rep.cardinalities) std::cout << " " << c;
        std::cout << "\n";
        if (rep.duplicate_members > 0)
            std::cout << "note: " << rep.duplicate_members
                      << " member(s) coincide as sets with an earlier member\n";
        std::cout << "all three checks agree: " << (rep.all_pass() ? "yes" : "NO") << "\n";
    }
    return rep.all_pass() ? kExitPositive : kExitNegative;
}

int print_sweep(const SweepResult& res, const char* command, bool as_json) {
    if (as_json) {
        json j{{"command", command},
               {"instances", res.instances},
               {"checks", res.checks},
               {"failures", res.failures}};
        if (!res.first_failure.empty()) j["first_failure"] = res.first_failure;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << command << ": " << res.instances << " instances, " << res.checks
                  << " checks, " << res.failures << " failures\n";
        if (!res.first_failure.empty())
            std::cout << "first failure: " << res.first_failure << "\n";
    }
    return res.failures == 0 ? kExitPositive : kExitNegative;
}

GridSpec spec_from_flags(const std::string& kind, std::optional<int> m, std::optional<int> n,
                         std::optional<int> d) {
    auto need = [](std::optional<int> v, const char* what) {
        if (!v) throw ArgumentError(std::string("this kind needs --") + what);
        return *v;
    };
    if (kind == "grid") return GridSpec::grid(need(m, "m"), need(n, "n"));
    if (kind == "cylinder") return GridSpec::cylinder(need(m, "m"), need(n, "n"));
    if (kind == "torus") return GridSpec::torus(need(m, "m"), need(n, "n"));
    if (kind == "hypercube") return GridSpec::hypercube(d ? *d : need(m, "d or --m"));
    if (kind == "crown") return GridSpec::crown(n ? *n : need(m, "n or --m"));
    if (kind == "moebius") return GridSpec::moebius(n ? *n : need(m, "n or --m"));
    throw ArgumentError("unknown kind \"" + kind + "\"");
}

// ---------------------------------------------------------------- family --

struct FamilyArgs {
    std::string in, out;
    std::vector<int> set;
    std::optional<int> n;
    bool one_based = false;
    std::optional<int> anchor;
    std::optional<int> l, m;
    std::vector<int> index_set, q_values;
    std::optional<int> r;
    bool full = false;
};

int run_family_translates(const FamilyArgs& a, const RunConfig& cfg) {
    if (!a.n) throw ArgumentError("--n is required");
    std::vector<int> internal;
    for (int label : a.set) internal.push_back(internal_element(label, *a.n, a.one_based));
    const int anchor_label =
        a.anchor ? *a.anchor : *std::min_element(a.set.begin(), a.set.end());
    TranslateFamily t =
        cyclic_translates(internal, *a.n, internal_element(anchor_label, *a.n, a.one_based));
    FamilyDoc doc;
    doc.family = t.as_family();
    doc.one_based = a.one_based;
    doc.translate_base = t.base;
    doc.translate_anchor = t.base[0];
    write_output(a.out, emit_family(doc, cfg.json_out()));
    return kExitPositive;
}

int run_family_shift(const FamilyArgs& a, const RunConfig& cfg) {
    FamilyDoc doc = load_family(a.in, a.n,
                                a.one_based ? std::optional<bool>(true) : std::nullopt);
    TranslateFamily t = rebuild_translates(doc, a.anchor);

    const bool standard = a.l.has_value();
    const bool explicit_index = !a.index_set.empty() || a.r.has_value();
    if (standard == explicit_index)
        throw ArgumentError("give either --l/--m (standard index) or --I/--q/--r (explicit)");

    SuitableIndex s;
    if (standard) {
        s = standard_shift_index(t.modulus, *a.l, a.m.value_or(0));
    } else {
        if (!a.r) throw ArgumentError("an explicit index needs --r");
        std::vector<int> I = a.index_set;
        std::sort(I.begin(), I.end());
        I.erase(std::unique(I.begin(), I.end()), I.end());
        if (a.q_values.size() != I.size())
            throw ArgumentError("--q must list one image per index of --I (ascending order)");
        std::map<int, int> q;
        for (std::size_t i = 0; i < I.size(); ++i) q[I[i]] = a.q_values[i];
        SuitableCheck check = check_suitable(t.modulus, I, q, *a.r);
        if (!check.valid) {
            if (cfg.json_out()) {
                json j{{"command", "family shift"},
                       {"valid", false},
                       {"failed_condition", check.failed_condition},
                       {"message", check.message}};
                if (check.witness >= 0) j["witness"] = check.witness;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "not an r-suitable index: " << check.message << "\n";
            }
            return kExitNegative;
        }
        s = validate_suitable(t.modulus, I, q, *a.r);
    }

    ShiftedFamily sf = apply_shift(t, s);
    FamilyDoc out_doc;
    out_doc.family = sf.as_family();
    out_doc.one_based = doc.one_based;
    out_doc.translate_base = t.base;
    out_doc.translate_anchor = t.base[0];
    out_doc.suitable = s;
    write_output(a.out, emit_family(out_doc, cfg.json_out()));
    return kExitPositive;
}

int run_family_closure(const FamilyArgs& a, const RunConfig& cfg) {
    FamilyDoc doc = load_family(a.in, a.n,
                                a.one_based ? std::optional<bool>(true) : std::nullopt);
    FamilyDoc out_doc;
    out_doc.family = union_closure(doc.family, cfg.closure_opts());
    out_doc.one_based = doc.one_based;
    write_output(a.out, emit_family(out_doc, cfg.json_out()));
    return kExitPositive;
}

int run_family_verify(const FamilyArgs& a, const RunConfig& cfg) {
    FamilyDoc doc = load_family(a.in, a.n,
                                a.one_based ? std::optional<bool>(true) : std::nullopt);
    if (!a.full) {
        UccReport rep = verify_ucc(doc.family, cfg.closure_opts());
        print_ucc_report(rep, doc.family.universe_size, doc.one_based, cfg.json_out(),
                         "family verify");
        return rep.holds ? kExitPositive : kExitNegative;
    }

    Section3Report rep;
    if (doc.suitable) {
        if (!doc.translate_base || !doc.translate_anchor)
            throw ArgumentError("shifted-family input lacks translate provenance");
        ShiftedFamily sf = apply_shift(translates_from_provenance(doc), *doc.suitable);
        for (std::size_t i = 0; i < doc.family.size(); ++i)
            if (sf.member_set(static_cast<int>(i)) != doc.family.members[i])
                throw ArgumentError("family members do not match the recorded shift; "
                                    "the provenance is stale");
        rep = verify_section3(sf, cfg.enum_opts(), cfg.closure_opts());
    } else {
        rep = verify_section3(rebuild_translates(doc, a.anchor), cfg.enum_opts(),
                              cfg.closure_opts());
    }
    return print_section3(rep, doc.family.universe_size, doc.one_based, cfg.json_out());
}

// ----------------------------------------------------------------- graph --

struct GraphArgs {
    std::string in, out, kind;
    std::optional<int> m, n, d;
    std::string x_label;
};

int run_graph_gen(const GraphArgs& a, const RunConfig& cfg) {
    BipartiteGraph g = generate(spec_from_flags(a.kind, a.m, a.n, a.d));
    write_output(a.out, cfg.json_out() ? graph_to_json(g).dump(2) + "\n" : graph_to_text(g));
    return kExitPositive;
}

int run_graph_mis(const GraphArgs& a, const RunConfig& cfg) {
    BipartiteGraph g = load_graph(a.in);
    StableSetCollection c = maximal_stable_sets(g, cfg.enum_opts());
    if (cfg.json_out()) {
        json sets = json::array();
        for (const Mask& s : c.sets) {
            json set = json::array();
            for (int v : mask_elements(s)) set.push_back(g.labels[static_cast<std::size_t>(v)]);
            sets.push_back(std::move(set));
        }
        json counts = json::object();
        for (int v = 0; v < g.vertex_count(); ++v)
            counts[g.labels[static_cast<std::size_t>(v)]] =
                c.counts[static_cast<std::size_t>(v)];
        std::cout << json{{"command", "graph mis"},
                          {"total", c.total()},
                          {"sets", std::move(sets)},
                          {"counts", std::move(counts)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "maximal stable sets: " << c.total() << "\n";
        for (const Mask& s : c.sets) std::cout << label_list(g, mask_elements(s)) << "\n";
    }
    return kExitPositive;
}

int run_graph_rare(const GraphArgs& a, const RunConfig& cfg) {
    BipartiteGraph g = load_graph(a.in);
    RareReport rep = rare_vertices(g, cfg.enum_opts());
    if (cfg.json_out()) {
        json counts = json::object();
        for (int v = 0; v < g.vertex_count(); ++v)
            counts[g.labels[static_cast<std::size_t>(v)]] =
                rep.counts[static_cast<std::size_t>(v)];
        json j{{"command", "graph rare"},
               {"total", rep.total},
               {"counts", std::move(counts)}};
        json rx = json::array(), ry = json::array();
        for (int v : rep.rare_x) rx.push_back(g.labels[static_cast<std::size_t>(v)]);
        for (int v : rep.rare_y) ry.push_back(g.labels[static_cast<std::size_t>(v)]);
        j["rare_x"] = std::move(rx);
        j["rare_y"] = std::move(ry);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "maximal stable sets: " << rep.total << "\n";
        std::cout << "rare in X: " << label_list(g, rep.rare_x) << "\n";
        std::cout << "rare in Y: " << label_list(g, rep.rare_y) << "\n";
    }
    return kExitPositive;
}

int run_graph_swapmap(const GraphArgs& a, const RunConfig& cfg) {
    GridSpec spec = spec_from_flags(a.kind, a.m, a.n, a.d);
    BipartiteGraph g = generate(spec);
    VertexBijection f = canonical_swap_map(spec, g);
    if (!is_swap_automorphism(g, f))
        throw Error("internal: canonical map failed verification");
    write_output(a.out, bijection_to_json(g, f).dump(2) + "\n");
    (void)cfg;
    return kExitPositive;
}

int run_graph_autosearch(const GraphArgs& a, const RunConfig& cfg) {
    BipartiteGraph g = load_graph(a.in);
    SwapSearchResult res = find_swap_automorphism(g, cfg.search_opts());
    if (res.found()) {
        if (!is_swap_automorphism(g, *res.witness))
            throw Error("internal: search witness failed verification");
        std::cout << bijection_to_json(g, *res.witness).dump(2) << "\n";
        return kExitPositive;
    }
    const char* why = res.outcome == SwapSearchOutcome::none_class_size
                          ? "classes differ in size"
                      : res.outcome == SwapSearchOutcome::none_degree_multiset
                          ? "degree multisets differ"
                          : "backtracking exhausted the search space";
    if (cfg.json_out())
        std::cout << json{{"command", "graph autosearch"},
                          {"found", false},
                          {"reason", why},
                          {"nodes", res.nodes}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "no swap automorphism: " << why << "\n";
    return kExitNegative;
}

int run_graph_check_ucc(const GraphArgs& a, const RunConfig& cfg) {
    BipartiteGraph g = load_graph(a.in);
    UccGraphReport rep = graph_satisfies_ucc(g, cfg.enum_opts());
    if (cfg.json_out()) {
        json j{{"command", "graph check-ucc"},
               {"satisfied", rep.satisfied},
               {"total", rep.total_sets}};
        if (rep.satisfied) {
            j["witness_x"] = g.labels[static_cast<std::size_t>(rep.witness_x)];
            j["witness_y"] = g.labels[static_cast<std::size_t>(rep.witness_y)];
        }
        std::cout << j.dump(2) << "\n";
    } else if (rep.satisfied) {
        std::cout << "satisfied: rare witnesses "
                  << g.labels[static_cast<std::size_t>(rep.witness_x)] << " and "
                  << g.labels[static_cast<std::size_t>(rep.witness_y)] << " ("
                  << rep.total_sets << " maximal stable sets)\n";
    } else {
        std::cout << "NOT satisfied: a class has no rare vertex (" << rep.total_sets
                  << " maximal stable sets)\n";
    }
    return rep.satisfied ? kExitPositive : kExitNegative;
}

int run_check_prop1(const GraphArgs& a, const RunConfig& cfg) {
    BipartiteGraph g = load_graph(a.in);
    std::vector<int> xs;
    if (!a.x_label.empty()) {
        int v = g.find_label(a.x_label);
        if (v < 0 || !g.is_x(v))
            throw ArgumentError("\"" + a.x_label + "\" is not an X vertex");
        xs.push_back(v);
    } else {
        for (int v = 0; v < g.nx; ++v) xs.push_back(v);
    }

    bool all_agree = true;
    json items = json::array();
    for (int x : xs) {
        Prop1Report rep = check_prop1(g, x, cfg.enum_opts(), cfg.closure_opts());
        all_agree = all_agree && rep.agrees;
        if (cfg.json_out()) {
            items.push_back({{"x", g.labels[static_cast<std::size_t>(x)]},
                             {"rare", rep.rare},
                             {"abundant", rep.abundant},
                             {"agrees", rep.agrees},
                             {"stable_count", rep.stable_count},
                             {"stable_total", rep.stable_total},
                             {"closure_count", rep.closure_count},
                             {"closure_size", rep.closure_size}});
        } else {
            std::cout << g.labels[static_cast<std::size_t>(x)] << ": rare="
                      << (rep.rare ? "yes" : "no") << " (" << rep.stable_count << "/"
                      << rep.stable_total << "), abundant=" << (rep.abundant ? "yes" : "no")
                      << " (" << rep.closure_count << "/" << rep.closure_size
                      << "), agree=" << (rep.agrees ? "yes" : "NO") << "\n";
        }
    }
    if (cfg.json_out())
        std::cout << json{{"command", "check prop1"},
                          {"all_agree", all_agree},
                          {"vertices", std::move(items)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "rare <-> abundant agreement: " << (all_agree ? "yes" : "NO") << "\n";
    return all_agree ? kExitPositive : kExitNegative;
}

// ----------------------------------------------------------------- sweep --

struct SweepArgs {
    int max_x = 3, max_y = 3;
    int max_n = 7;
    std::optional<int> n;
    std::vector<int> set;
    bool one_based = false;
    std::optional<int> anchor;
    bool all_l = false, all_m = false;
    std::size_t random_count = 500;
    std::size_t sample = 50;
    std::uint64_t seed = 1;
    int rand_x = 7, rand_y = 7;
};

int run_sweep_shift(const SweepArgs& a, const RunConfig& cfg) {
    if (!a.n) throw ArgumentError("--n is required");
    if (!a.all_l || !a.all_m)
        throw ArgumentError("only the full grid is implemented: pass --all-l --all-m");
    std::optional<std::vector<int>> fixed;
    if (!a.set.empty()) {
        std::vector<int> internal;
        for (int label : a.set)
            internal.push_back(internal_element(label, *a.n, a.one_based));
        std::sort(internal.begin(), internal.end());
        fixed = internal;
    }
    SweepResult res = sweep_shift(*a.n, fixed, a.sample, a.seed, cfg.enum_opts(),
                                  cfg.closure_opts());
    return print_sweep(res, "sweep shift", cfg.json_out());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the union-closed conjecture: graph "
                 "formulation, cyclic translates, and anchor shifts"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env_cap = std::getenv("UCC_LAB_CLOSURE_CAP")) {
        try {
            cfg.closure_cap = std::stoull(env_cap);
        } catch (const std::exception&) {
            std::cerr << "error: invalid UCC_LAB_CLOSURE_CAP\n";
            return kExitUsage;
        }
    }
    app.add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--closure-cap", cfg.closure_cap, "union-closure size cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--vertex-cap", cfg.vertex_cap, "enumeration vertex cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--set-cap", cfg.set_cap, "enumeration set-count cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget, "automorphism search node budget")
        ->check(CLI::PositiveNumber);
    app.add_flag("--deterministic", cfg.deterministic, "run kernels single-threaded");

    FamilyArgs fam;
    GraphArgs gr;
    SweepArgs sw;
    int chosen = -1;  // driver index, dispatched after parse
    enum Cmd {
        kTranslates, kShift, kClosure, kVerify,
        kGen, kMis, kRare, kSwapmap, kAutosearch, kCheckUcc,
        kProp1, kSweepProp1, kSweepEdges, kSweepTranslates, kSweepShift,
    };

    auto* family = app.add_subcommand("family", "set-family commands");
    family->require_subcommand(1);
    {
        auto* c = family->add_subcommand("translates", "emit all cyclic translates of a set");
        c->add_option("--set", fam.set, "base set (display labels)")
            ->delimiter(',')
            ->required();
        c->add_option("--n", fam.n, "modulus")->required();
        c->add_flag("--one-based", fam.one_based, "labels 1..n with n standing for 0");
        c->add_option("--anchor", fam.anchor, "anchor element (default: least label)");
        c->add_option("--out", fam.out, "output path (default stdout)");
        c->callback([&] { chosen = kTranslates; });
    }
    {
        auto* c = family->add_subcommand("shift", "apply the anchor shift P_{I,q}");
        c->add_option("--in", fam.in, "family file (default stdin)");
        c->add_option("--l", fam.l, "standard index: shift the first l translates");
        c->add_option("--m", fam.m, "standard index: cyclic shift length (default 0)");
        c->add_option("--I", fam.index_set, "explicit index set")->delimiter(',');
        c->add_option("--q", fam.q_values, "images of --I in ascending-I order")
            ->delimiter(',');
        c->add_option("--r", fam.r, "explicit r");
        c->add_option("--anchor", fam.anchor, "anchor element (display label)");
        c->add_option("--n", fam.n, "universe override for plain text input");
        c->add_flag("--one-based", fam.one_based, "treat input labels as one-based");
        c->add_option("--out", fam.out, "output path (default stdout)");
        c->callback([&] { chosen = kShift; });
    }
    {
        auto* c = family->add_subcommand("closure", "emit the generated union-closed family");
        c->add_option("--in", fam.in, "family file (default stdin)");
        c->add_option("--n", fam.n, "universe override for plain text input");
        c->add_flag("--one-based", fam.one_based, "treat input labels as one-based");
        c->add_option("--out", fam.out, "output path (default stdout)");
        c->callback([&] { chosen = kClosure; });
    }
    {
        auto* c = family->add_subcommand("verify", "verify abundance over the closure");
        c->add_option("--in", fam.in, "family file (default stdin)");
        c->add_flag("--full", fam.full,
                    "also verify the explicit automorphism and the graph form");
        c->add_option("--anchor", fam.anchor, "anchor for translate reconstruction");
        c->add_option("--n", fam.n, "universe override for plain text input");
        c->add_flag("--one-based", fam.one_based, "treat input labels as one-based");
        c->callback([&] { chosen = kVerify; });
    }

    auto* graph = app.add_subcommand("graph", "bipartite-graph commands");
    graph->require_subcommand(1);
    const std::vector<std::string> kinds{"grid", "cylinder", "torus",
                                         "hypercube", "crown", "moebius"};
    {
        auto* c = graph->add_subcommand("gen", "generate a named graph family instance");
        c->add_option("--kind", gr.kind, "graph kind")
            ->check(CLI::IsMember(kinds))
            ->required();
        c->add_option("--m", gr.m, "rows / cycle length / size");
        c->add_option("--n", gr.n, "columns / crown and ladder size");
        c->add_option("--d", gr.d, "hypercube dimension");
        c->add_option("--out", gr.out, "output path (default stdout)");
        c->callback([&] { chosen = kGen; });
    }
    {
        auto* c = graph->add_subcommand("mis", "enumerate all maximal stable sets");
        c->add_option("--in", gr.in, "graph file (default stdin)");
        c->callback([&] { chosen = kMis; });
    }
    {
        auto* c = graph->add_subcommand("rare", "rare vertices per class");
        c->add_option("--in", gr.in, "graph file (default stdin)");
        c->callback([&] { chosen = kRare; });
    }
    {
        auto* c = graph->add_subcommand("swapmap", "canonical class-swapping map");
        c->add_option("--kind", gr.kind, "graph kind")
            ->check(CLI::IsMember(kinds))
            ->required();
        c->add_option("--m", gr.m, "rows / cycle length");
        c->add_option("--n", gr.n, "columns");
        c->add_option("--d", gr.d, "hypercube dimension");
        c->add_option("--out", gr.out, "output path (default stdout)");
        c->callback([&] { chosen = kSwapmap; });
    }
    {
        auto* c = graph->add_subcommand("autosearch", "backtracking swap-automorphism search");
        c->add_option("--in", gr.in, "graph file (default stdin)");
        c->callback([&] { chosen = kAutosearch; });
    }
    {
        auto* c = graph->add_subcommand("check-ucc", "rare vertex in each class?");
        c->add_option("--in", gr.in, "graph file (default stdin)");
        c->callback([&] { chosen = kCheckUcc; });
    }

    auto* check = app.add_subcommand("check", "cross-module consistency checks");
    check->require_subcommand(1);
    {
        auto* c = check->add_subcommand("prop1", "rare <-> abundant for X vertices");
        c->add_option("--in", gr.in, "graph file (default stdin)");
        c->add_option("--x", gr.x_label, "check a single X vertex (default: all)");
        c->callback([&] { chosen = kProp1; });
    }

    auto* sweep = app.add_subcommand("sweep", "exhaustive / seeded instance sweeps");
    sweep->require_subcommand(1);
    {
        auto* c = sweep->add_subcommand("prop1", "exhaustive rare <-> abundant agreement");
        c->add_option("--max-x", sw.max_x, "largest |X|")->capture_default_str();
        c->add_option("--max-y", sw.max_y, "largest |Y|")->capture_default_str();
        c->callback([&] { chosen = kSweepProp1; });
    }
    {
        auto* c = sweep->add_subcommand("edge-rarity", "every edge has a rare endpoint");
        c->add_option("--max-x", sw.max_x, "exhaustive |X| bound")->capture_default_str();
        c->add_option("--max-y", sw.max_y, "exhaustive |Y| bound")->capture_default_str();
        c->add_option("--random", sw.random_count, "number of seeded random graphs")
            ->capture_default_str();
        c->add_option("--rand-x", sw.rand_x, "random |X| bound")->capture_default_str();
        c->add_option("--rand-y", sw.rand_y, "random |Y| bound")->capture_default_str();
        c->add_option("--seed", sw.seed, "random seed")->capture_default_str();
        c->callback([&] { chosen = kSweepEdges; });
    }
    {
        auto* c = sweep->add_subcommand("translates", "proposition sweep over every R");
        c->add_option("--max-n", sw.max_n, "largest modulus")->capture_default_str();
        c->callback([&] { chosen = kSweepTranslates; });
    }
    {
        auto* c = sweep->add_subcommand("shift", "theorem sweep over shifts of translates");
        c->add_option("--n", sw.n, "modulus")->required();
        c->add_option("--set", sw.set, "fix one base set (display labels)")->delimiter(',');
        c->add_flag("--one-based", sw.one_based, "treat --set labels as one-based");
        c->add_flag("--all-l", sw.all_l, "sweep every l in 1..n");
        c->add_flag("--all-m", sw.all_m, "sweep every m in 0..l-1");
        c->add_option("--sample", sw.sample, "seeded sample size when R is not fixed")
            ->capture_default_str();
        c->add_option("--seed", sw.seed, "random seed")->capture_default_str();
        c->callback([&] { chosen = kSweepShift; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        switch (chosen) {
            case kTranslates: return run_family_translates(fam, cfg);
            case kShift: return run_family_shift(fam, cfg);
            case kClosure: return run_family_closure(fam, cfg);
            case kVerify: return run_family_verify(fam, cfg);
            case kGen: return run_graph_gen(gr, cfg);
            case kMis: return run_graph_mis(gr, cfg);
            case kRare: return run_graph_rare(gr, cfg);
            case kSwapmap: return run_graph_swapmap(gr, cfg);
            case kAutosearch: return run_graph_autosearch(gr, cfg);
            case kCheckUcc: return run_graph_check_ucc(gr, cfg);
            case kProp1: return run_check_prop1(gr, cfg);
            case kSweepProp1:
                return print_sweep(sweep_prop1(sw.max_x, sw.max_y, cfg.enum_opts(),
                                               cfg.closure_opts()),
                                   "sweep prop1", cfg.json_out());
            case kSweepEdges: {
                SweepResult ex = sweep_edge_rarity_exhaustive(sw.max_x, sw.max_y,
                                                              cfg.enum_opts());
                SweepResult rnd = sweep_edge_rarity_random(sw.random_count, sw.rand_x,
                                                           sw.rand_y, sw.seed,
                                                           cfg.enum_opts());
                SweepResult both{ex.instances + rnd.instances, ex.checks + rnd.checks,
                                 ex.failures + rnd.failures,
                                 ex.first_failure.empty() ? rnd.first_failure
                                                          : ex.first_failure};
                return print_sweep(both, "sweep edge-rarity", cfg.json_out());
            }
            case kSweepTranslates:
                return print_sweep(sweep_translates(sw.max_n, cfg.enum_opts(),
                                                    cfg.closure_opts()),
                                   "sweep translates", cfg.json_out());
            case kSweepShift: return run_sweep_shift(sw, cfg);
            default: throw ArgumentError("no subcommand selected");
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kExitNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
