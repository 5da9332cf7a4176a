#include "ucc/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "ucc/errors.hpp"

namespace ucc {

using nlohmann::json;

namespace {

constexpr const char* kFamilyPragma = "# ucc-lab family";

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ArgumentError("input is not valid JSON");
    return j;
}

// member sets in output order: index order for indexed families, canonical
// lexicographic display order for sets of sets
std::vector<std::vector<int>> display_sets(const FamilyDoc& doc) {
    std::vector<std::vector<int>> sets;
    sets.reserve(doc.family.size());
    for (const Mask& m : doc.family.members)
        sets.push_back(display_set(m, doc.family.universe_size, doc.one_based));
    if (!doc.family.allow_duplicates) std::sort(sets.begin(), sets.end());
    return sets;
}

std::vector<std::vector<int>> sets_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ArgumentError(std::string("family JSON needs an array field \"") + key + "\"");
    std::vector<std::vector<int>> out;
    for (const json& s : j.at(key)) {
        if (!s.is_array()) throw ArgumentError("each set must be an array of integers");
        std::vector<int> elems;
        for (const json& e : s) {
            if (!e.is_number_integer()) throw ArgumentError("set elements must be integers");
            elems.push_back(e.get<int>());
        }
        out.push_back(std::move(elems));
    }
    return out;
}

FamilyDoc doc_from_sets(const std::vector<std::vector<int>>& label_sets, int universe,
                        bool one_based, bool indexed) {
    std::vector<std::vector<int>> internal;
    internal.reserve(label_sets.size());
    for (const auto& s : label_sets) {
        std::vector<int> t;
        t.reserve(s.size());
        for (int label : s) t.push_back(internal_element(label, universe, one_based));
        internal.push_back(std::move(t));
    }
    FamilyDoc doc;
    doc.family = make_family(internal, universe, indexed);
    doc.one_based = one_based;
    return doc;
}

}  // namespace

int display_label(int element, int universe, bool one_based) {
    if (!one_based) return element;
    return element == 0 ? universe : element;
}

int internal_element(int label, int universe, bool one_based) {
    if (!one_based) {
        if (label < 0 || label >= universe)
            throw RangeError("element " + std::to_string(label) +
                             " outside universe of size " + std::to_string(universe));
        return label;
    }
    if (label < 1 || label > universe)
        throw RangeError("one-based label " + std::to_string(label) + " outside 1.." +
                         std::to_string(universe));
    return label % universe;
}

std::vector<int> display_set(Mask m, int universe, bool one_based) {
    std::vector<int> out;
    for (int e : mask_elements(m)) out.push_back(display_label(e, universe, one_based));
    std::sort(out.begin(), out.end());
    return out;
}

json family_to_json(const FamilyDoc& doc) {
    json j;
    j["universe"] = doc.family.universe_size;
    j["one_based"] = doc.one_based;
    j["indexed"] = doc.family.allow_duplicates;
    j["sets"] = display_sets(doc);
    if (doc.translate_base) {
        json t;
        std::vector<int> labels;
        for (int e : *doc.translate_base)
            labels.push_back(display_label(e, doc.family.universe_size, doc.one_based));
        std::sort(labels.begin(), labels.end());
        t["set"] = labels;
        t["anchor"] =
            display_label(*doc.translate_anchor, doc.family.universe_size, doc.one_based);
        j["translates"] = t;
    }
    if (doc.suitable) j["suitable"] = suitable_to_json(*doc.suitable);
    return j;
}

FamilyDoc family_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("family JSON must be an object");
    if (!j.contains("universe") || !j.at("universe").is_number_integer())
        throw ArgumentError("family JSON needs an integer \"universe\"");
    const int universe = j.at("universe").get<int>();
    const bool one_based = j.value("one_based", false);
    const bool indexed = j.value("indexed", true);
    FamilyDoc doc = doc_from_sets(sets_field(j, "sets"), universe, one_based, indexed);

    if (j.contains("translates")) {
        const json& t = j.at("translates");
        std::vector<int> base;
        for (const json& e : t.at("set"))
            base.push_back(internal_element(e.get<int>(), universe, one_based));
        doc.translate_base = base;
        doc.translate_anchor = internal_element(t.at("anchor").get<int>(), universe, one_based);
    }
    if (j.contains("suitable")) doc.suitable = suitable_from_json(j.at("suitable"));
    return doc;
}

std::string family_to_text(const FamilyDoc& doc) {
    std::ostringstream out;
    out << kFamilyPragma << " universe=" << doc.family.universe_size
        << " base=" << (doc.one_based ? 1 : 0) << "\n";
    for (const auto& s : display_sets(doc)) {
        if (s.empty()) {
            out << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << "\n";
    }
    return out.str();
}

FamilyDoc family_from_text(const std::string& text, std::optional<int> universe_override,
                           std::optional<bool> one_based_override) {
    std::optional<int> pragma_universe;
    std::optional<bool> pragma_base;
    std::vector<std::vector<int>> label_sets;
    int max_label = -1;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(kFamilyPragma, 0) == 0) {
            std::istringstream ps(line.substr(std::string(kFamilyPragma).size()));
            std::string tok;
            while (ps >> tok) {
                if (tok.rfind("universe=", 0) == 0) pragma_universe = std::stoi(tok.substr(9));
                if (tok.rfind("base=", 0) == 0) pragma_base = tok.substr(5) == "1";
            }
            continue;
        }
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<int> elems;
        std::string tok;
        bool explicit_empty = false;
        while (ls >> tok) {
            if (tok == "-") {
                explicit_empty = true;
                continue;
            }
            try {
                elems.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ArgumentError("unexpected token \"" + tok + "\" in family text");
            }
        }
        if (elems.empty() && !explicit_empty) continue;  // blank or comment-only line
        for (int e : elems) max_label = std::max(max_label, e);
        label_sets.push_back(std::move(elems));
    }

    const bool one_based = one_based_override.value_or(pragma_base.value_or(false));
    int universe;
    if (universe_override)
        universe = *universe_override;
    else if (pragma_universe)
        universe = *pragma_universe;
    else
        universe = one_based ? std::max(max_label, 0) : max_label + 1;
    return doc_from_sets(label_sets, universe, one_based, /*indexed=*/true);
}

FamilyDoc read_family(std::istream& in, std::optional<int> universe_override,
                      std::optional<bool> one_based_override) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        FamilyDoc doc = family_from_json(parse_json(text));
        if ((universe_override && *universe_override != doc.family.universe_size) ||
            (one_based_override && *one_based_override != doc.one_based))
            throw ArgumentError("universe/base flags contradict the input file");
        return doc;
    }
    return family_from_text(text, universe_override, one_based_override);
}

json graph_to_json(const BipartiteGraph& g) {
    json j;
    j["x"] = std::vector<std::string>(g.labels.begin(), g.labels.begin() + g.nx);
    j["y"] = std::vector<std::string>(g.labels.begin() + g.nx, g.labels.end());
    json edges = json::array();
    for (int xi = 0; xi < g.nx; ++xi) {
        Mask nb = g.adj[static_cast<std::size_t>(xi)];
        while (nb.any()) {
            int y = nb.pop_lowest();
            edges.push_back({g.labels[static_cast<std::size_t>(xi)],
                             g.labels[static_cast<std::size_t>(y)]});
        }
    }
    j["edges"] = std::move(edges);
    return j;
}

BipartiteGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("edges"))
        throw ArgumentError("graph JSON needs \"x\", \"y\" and \"edges\"");
    std::vector<std::string> xs, ys;
    for (const json& l : j.at("x")) xs.push_back(l.get<std::string>());
    for (const json& l : j.at("y")) ys.push_back(l.get<std::string>());

    auto index_of = [](const std::vector<std::string>& v, const std::string& l) {
        auto it = std::find(v.begin(), v.end(), l);
        if (it == v.end()) throw ArgumentError("edge endpoint \"" + l + "\" is not a vertex");
        return static_cast<int>(it - v.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ArgumentError("each edge must be a [x_label, y_label] pair");
        edges.emplace_back(index_of(xs, e.at(0).get<std::string>()),
                           index_of(ys, e.at(1).get<std::string>()));
    }
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

std::string graph_to_text(const BipartiteGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw ArgumentError("the edge-list text format cannot carry isolated vertex \"" +
                                g.labels[static_cast<std::size_t>(v)] + "\"; write JSON");
    std::ostringstream out;
    out << "bipartite " << g.nx << " " << g.ny << "\n";
    for (int xi = 0; xi < g.nx; ++xi) {
        Mask nb = g.adj[static_cast<std::size_t>(xi)];
        while (nb.any())
            out << g.labels[static_cast<std::size_t>(xi)] << " "
                << g.labels[static_cast<std::size_t>(nb.pop_lowest())] << "\n";
    }
    return out.str();
}

BipartiteGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int want_x = -1, want_y = -1;
    std::vector<std::string> xs, ys;
    std::vector<std::pair<int, int>> edges;

    auto intern = [](std::vector<std::string>& side, const std::string& label) {
        auto it = std::find(side.begin(), side.end(), label);
        if (it != side.end()) return static_cast<int>(it - side.begin());
        side.push_back(label);
        return static_cast<int>(side.size()) - 1;
    };

    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a)) continue;
        if (a == "bipartite") {
            if (!(ls >> want_x >> want_y))
                throw ArgumentError("malformed header; expected \"bipartite |X| |Y|\"");
            continue;
        }
        if (!(ls >> b) || (ls >> c))
            throw ArgumentError("each edge line must hold exactly two labels");
        edges.emplace_back(intern(xs, a), intern(ys, b));
    }
    if (want_x < 0) throw ArgumentError("missing \"bipartite |X| |Y|\" header");
    if (static_cast<int>(xs.size()) != want_x || static_cast<int>(ys.size()) != want_y)
        throw ArgumentError("header announces " + std::to_string(want_x) + "+" +
                            std::to_string(want_y) + " vertices but edges mention " +
                            std::to_string(xs.size()) + "+" + std::to_string(ys.size()));
    return make_bipartite(std::move(xs), std::move(ys), edges);
}

BipartiteGraph read_graph(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(parse_json(text));
    return graph_from_text(text);
}

json bijection_to_json(const BipartiteGraph& g, const VertexBijection& f) {
    json map = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        map[g.labels[static_cast<std::size_t>(v)]] = g.labels[static_cast<std::size_t>(f(v))];
    return json{{"map", std::move(map)}};
}

VertexBijection bijection_from_json(const json& j, const BipartiteGraph& g) {
    if (!j.is_object() || !j.contains("map") || !j.at("map").is_object())
        throw ArgumentError("bijection JSON needs an object field \"map\"");
    VertexBijection f;
    f.forward.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (const auto& [from, to] : j.at("map").items()) {
        const int v = g.find_label(from);
        const int t = g.find_label(to.get<std::string>());
        if (v < 0 || t < 0)
            throw ArgumentError("bijection mentions a label the graph does not have");
        f.forward[static_cast<std::size_t>(v)] = t;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f(v) < 0)
            throw ArgumentError("bijection leaves vertex \"" +
                                g.labels[static_cast<std::size_t>(v)] + "\" unmapped");
    return f;
}

json suitable_to_json(const SuitableIndex& s) {
    json q = json::object();
    for (const auto& [i, qi] : s.q) q[std::to_string(i)] = qi;
    return json{{"n", s.modulus}, {"I", s.members}, {"q", std::move(q)}, {"r", s.r}};
}

SuitableIndex suitable_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("I") || !j.contains("q") ||
        !j.contains("r"))
        throw ArgumentError("suitable-index JSON needs \"n\", \"I\", \"q\" and \"r\"");
    const int n = j.at("n").get<int>();
    std::vector<int> I;
    for (const json& e : j.at("I")) I.push_back(e.get<int>());
    std::map<int, int> q;
    for (const auto& [key, val] : j.at("q").items()) q[std::stoi(key)] = val.get<int>();
    return validate_suitable(n, I, q, j.at("r").get<int>());
}

}  // namespace ucc
