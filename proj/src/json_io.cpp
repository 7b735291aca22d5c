#include "pangram/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pangram/error.hpp"

namespace pangram {

namespace {

const Json& field(const Json& j, const char* name, std::string_view ctx) {
    if (!j.is_object()) {
        throw InputError(std::string(ctx) + ": expected an object");
    }
    auto it = j.find(name);
    if (it == j.end()) {
        throw InputError(std::string(ctx) + ": missing field '" + name + "'");
    }
    return *it;
}

std::string where(std::string_view ctx, const char* name) { return std::string(ctx) + "." + name; }

std::string as_string(const Json& j, std::string_view ctx) {
    if (!j.is_string()) {
        throw InputError(std::string(ctx) + ": expected a string");
    }
    return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, std::string_view ctx) {
    if (!j.is_array()) {
        throw InputError(std::string(ctx) + ": expected an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& e : j) {
        out.push_back(as_string(e, ctx));
    }
    return out;
}

std::size_t as_size(const Json& j, std::string_view ctx) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw InputError(std::string(ctx) + ": expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::string_view kind_of(const Json& j, std::string_view ctx) {
    auto it = j.find("kind");
    if (it == j.end()) {
        return {};
    }
    if (!it->is_string()) {
        throw InputError(std::string(ctx) + ".kind: expected a string");
    }
    return it->get_ref<const std::string&>();
}

void expect_kind(const Json& j, std::string_view kind) {
    auto k = kind_of(j, kind);
    if (!k.empty() && k != kind) {
        throw InputError(std::string(kind) + ".kind: expected \"" + std::string(kind) + "\", got \"" +
                         std::string(k) + "\"");
    }
}

Alphabet alphabet_field(const Json& j, const char* name, std::string_view ctx) {
    return Alphabet(as_strings(field(j, name, ctx), where(ctx, name)));
}

std::vector<NamedTransition> transitions(const Json& j, std::string_view ctx) {
    const auto& rows = field(j, "transitions", ctx);
    const std::string here = where(ctx, "transitions");
    if (!rows.is_array()) {
        throw InputError(here + ": expected an array");
    }
    std::vector<NamedTransition> out;
    for (const auto& r : rows) {
        out.push_back({as_string(field(r, "from", here), here + ".from"),
                       as_string(field(r, "symbol", here), here + ".symbol"),
                       as_string(field(r, "to", here), here + ".to")});
    }
    return out;
}

std::set<Word> words(const Json& j, const Alphabet& sigma, std::string_view ctx) {
    if (!j.is_array()) {
        throw InputError(std::string(ctx) + ": expected an array of words");
    }
    std::set<Word> out;
    for (const auto& w : j) {
        const auto symbols = as_strings(w, ctx);
        out.insert(sigma.encode(symbols, ctx));
    }
    return out;
}

Json words_to_json(const Alphabet& sigma, const std::set<Word>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) {
        out.push_back(sigma.decode(w));
    }
    return out;
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
}

} // namespace

Json parse_json(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string(source) + ": invalid JSON: " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << j.dump(2) << '\n';
}

Dfa dfa_from_json(const Json& j) {
    return guarded([&] {
        expect_kind(j, "dfa");
        return Dfa::from_named(alphabet_field(j, "alphabet", "dfa"),
                               as_strings(field(j, "states", "dfa"), "dfa.states"),
                               as_string(field(j, "initial", "dfa"), "dfa.initial"),
                               as_strings(field(j, "accepting", "dfa"), "dfa.accepting"),
                               transitions(j, "dfa"));
    });
}

Nfa nfa_from_json(const Json& j) {
    return guarded([&] {
        expect_kind(j, "nfa");
        return Nfa::from_named(alphabet_field(j, "alphabet", "nfa"),
                               as_strings(field(j, "states", "nfa"), "nfa.states"),
                               as_strings(field(j, "initials", "nfa"), "nfa.initials"),
                               as_strings(field(j, "accepting", "nfa"), "nfa.accepting"),
                               transitions(j, "nfa"));
    });
}

Cfg cfg_from_json(const Json& j) {
    return guarded([&] {
        expect_kind(j, "cfg");
        const auto& rows = field(j, "rules", "cfg");
        if (!rows.is_array()) {
            throw InputError("cfg.rules: expected an array");
        }
        std::vector<NamedRule> rules;
        for (const auto& r : rows) {
            rules.push_back({as_string(field(r, "lhs", "cfg.rules"), "cfg.rules.lhs"),
                             as_strings(field(r, "rhs", "cfg.rules"), "cfg.rules.rhs")});
        }
        return Cfg::from_names(alphabet_field(j, "terminals", "cfg"),
                               as_strings(field(j, "nonterminals", "cfg"), "cfg.nonterminals"),
                               as_string(field(j, "start", "cfg"), "cfg.start"), rules);
    });
}

SltSpec slt_from_json(const Json& j) {
    return guarded([&] {
        expect_kind(j, "slt");
        Alphabet sigma = alphabet_field(j, "alphabet", "slt");
        auto s = words(field(j, "prefixes", "slt"), sigma, "slt.prefixes");
        auto i = words(field(j, "infixes", "slt"), sigma, "slt.infixes");
        auto e = words(field(j, "suffixes", "slt"), sigma, "slt.suffixes");
        return SltSpec(as_size(field(j, "k", "slt"), "slt.k"), std::move(sigma), std::move(s), std::move(i),
                       std::move(e));
    });
}

SptSpec spt_from_json(const Json& j) {
    return guarded([&] {
        expect_kind(j, "spt");
        Alphabet sigma = alphabet_field(j, "alphabet", "spt");
        auto f = words(field(j, "forbidden", "spt"), sigma, "spt.forbidden");
        return SptSpec(as_size(field(j, "k", "spt"), "spt.k"), std::move(sigma), std::move(f));
    });
}

Graph graph_from_json(const Json& j) {
    return guarded([&] {
        const auto& rows = field(j, "edges", "graph");
        if (!rows.is_array()) {
            throw InputError("graph.edges: expected an array");
        }
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : rows) {
            auto ends = as_strings(e, "graph.edges");
            if (ends.size() != 2) {
                throw InputError("graph.edges: each edge is a [from, to] pair");
            }
            edges.emplace_back(ends[0], ends[1]);
        }
        return Graph::from_names(as_strings(field(j, "nodes", "graph"), "graph.nodes"), edges);
    });
}

BetweennessInstance betweenness_from_json(const Json& j) {
    return guarded([&] {
        Alphabet elements = alphabet_field(j, "elements", "betweenness");
        const auto& rows = field(j, "constraints", "betweenness");
        if (!rows.is_array()) {
            throw InputError("betweenness.constraints: expected an array");
        }
        std::vector<BetweennessInstance::Constraint> cs;
        for (const auto& c : rows) {
            auto names = as_strings(c, "betweenness.constraints");
            if (names.size() != 3) {
                throw InputError("betweenness.constraints: each constraint is an [a, b, c] triple");
            }
            cs.push_back({elements.letter(names[0], "betweenness.constraints"),
                          elements.letter(names[1], "betweenness.constraints"),
                          elements.letter(names[2], "betweenness.constraints")});
        }
        return BetweennessInstance(std::move(elements), std::move(cs));
    });
}

Acceptor acceptor_from_json(const Json& j) {
    return guarded([&] {
        if (!j.is_object()) {
            throw InputError("document: expected an object");
        }
        const auto kind = kind_of(j, "document");
        if (kind.empty()) {
            throw InputError("document: missing field 'kind'");
        }
        auto make = [&]() -> Acceptor {
            if (kind == "dfa") {
                return dfa_from_json(j);
            }
            if (kind == "nfa") {
                return nfa_from_json(j);
            }
            if (kind == "cfg") {
                return cfg_from_json(j);
            }
            if (kind == "slt") {
                return slt_from_json(j);
            }
            if (kind == "spt") {
                return spt_from_json(j);
            }
            throw InputError("document.kind: unknown kind \"" + std::string(kind) + "\"");
        };
        Acceptor a = make();
        if (auto it = j.find("tags"); it != j.end()) {
            for (const auto& tag : as_strings(*it, "document.tags")) {
                if (tag == "finite") {
                    a.finite = true;
                } else if (tag == "cofinite") {
                    a.cofinite = true;
                } else {
                    throw InputError("document.tags: unknown tag \"" + tag + "\"");
                }
            }
        }
        validate_tags(a);
        return a;
    });
}

Json to_json(const Dfa& x) {
    Json transitions = Json::array();
    std::vector<std::string> accepting;
    for (State q = 0; q < x.state_count(); ++q) {
        if (x.is_accepting(q)) {
            accepting.push_back(x.state_name(q));
        }
        for (Letter a = 0; a < x.alphabet().size(); ++a) {
            transitions.push_back(
                {{"from", x.state_name(q)}, {"symbol", x.alphabet()[a]}, {"to", x.state_name(x.next(q, a))}});
        }
    }
    return {{"kind", "dfa"},
            {"alphabet", x.alphabet().symbols()},
            {"states", x.state_names()},
            {"initial", x.state_name(x.initial())},
            {"accepting", accepting},
            {"transitions", transitions}};
}

Json to_json(const Nfa& x) {
    Json transitions = Json::array();
    std::vector<std::string> accepting, initials;
    for (State q : x.initials()) {
        initials.push_back(x.state_name(q));
    }
    for (State q = 0; q < x.state_count(); ++q) {
        if (x.is_accepting(q)) {
            accepting.push_back(x.state_name(q));
        }
        for (Letter a = 0; a < x.alphabet().size(); ++a) {
            for (State r : x.successors(q, a)) {
                transitions.push_back(
                    {{"from", x.state_name(q)}, {"symbol", x.alphabet()[a]}, {"to", x.state_name(r)}});
            }
        }
    }
    return {{"kind", "nfa"},
            {"alphabet", x.alphabet().symbols()},
            {"states", x.state_names()},
            {"initials", initials},
            {"accepting", accepting},
            {"transitions", transitions}};
}

Json to_json(const Cfg& g) {
    Json rules = Json::array();
    for (const auto& r : g.named_rules()) {
        rules.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
    }
    return {{"kind", "cfg"},
            {"terminals", g.terminals().symbols()},
            {"nonterminals", g.nonterminals()},
            {"start", g.nonterminals()[g.start()]},
            {"rules", rules}};
}

Json to_json(const SltSpec& s) {
    return {{"kind", "slt"},
            {"k", s.k()},
            {"alphabet", s.alphabet().symbols()},
            {"prefixes", words_to_json(s.alphabet(), s.prefixes())},
            {"infixes", words_to_json(s.alphabet(), s.infixes())},
            {"suffixes", words_to_json(s.alphabet(), s.suffixes())}};
}

Json to_json(const SptSpec& s) {
    return {{"kind", "spt"},
            {"k", s.k()},
            {"alphabet", s.alphabet().symbols()},
            {"forbidden", words_to_json(s.alphabet(), s.forbidden())}};
}

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({g.nodes()[u], g.nodes()[v]});
    }
    return {{"nodes", g.nodes()}, {"edges", edges}};
}

Json to_json(const BetweennessInstance& b) {
    Json cs = Json::array();
    for (const auto& [x, y, z] : b.constraints) {
        cs.push_back({b.elements[x], b.elements[y], b.elements[z]});
    }
    return {{"elements", b.elements.symbols()}, {"constraints", cs}};
}

Json to_json(const Acceptor& a) {
    Json j = std::visit([](const auto& x) { return to_json(x); }, a.body);
    if (a.finite || a.cofinite) {
        Json tags = Json::array();
        if (a.finite) {
            tags.push_back("finite");
        }
        if (a.cofinite) {
            tags.push_back("cofinite");
        }
        // Keep "kind" first, tags right after it.
        Json out{{"kind", j["kind"]}, {"tags", tags}};
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() != "kind") {
                out[it.key()] = it.value();
            }
        }
        return out;
    }
    return j;
}

Json word_to_json(const Alphabet& sigma, const Word& w) { return sigma.decode(w); }

namespace {

void add_witness(Json& out, const Verdict& v, const Alphabet& sigma) {
    if (v.witness) {
        out["witness"] = word_to_json(sigma, *v.witness);
        if (sigma.single_character_symbols()) {
            out["witness_text"] = sigma.render(*v.witness);
        }
    }
    if (!v.note.empty()) {
        out["witness_note"] = v.note;
    }
}

} // namespace

Json decision_to_json(const Decision& d, const Alphabet& sigma) {
    Json out{{"problem", to_string(d.problem)}};
    switch (d.kind) {
    case CellKind::undecidable:
        out["answer"] = "undecidable";
        return out;
    case CellKind::trivial:
        out["answer"] = d.verdict.answer ? "trivial-true" : "trivial-false";
        break;
    case CellKind::decided:
        out["answer"] = d.verdict.answer;
        break;
    }
    add_witness(out, d.verdict, sigma);
    return out;
}

Json verdict_to_json(Problem p, const Verdict& v, const Alphabet& sigma) {
    Json out{{"problem", to_string(p)}, {"answer", v.answer}};
    add_witness(out, v, sigma);
    return out;
}

} // namespace pangram
