#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "pangram/corpus.hpp"
#include "pangram/error.hpp"
#include "pangram/json_io.hpp"
#include "pangram/oracle.hpp"

namespace pangram::cli {

namespace {

Problem problem_arg(const std::string& name) {
    auto p = parse_problem(name);
    if (!p) {
        throw InputError("problem: unknown problem \"" + name + "\"");
    }
    return *p;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.push_back(s.substr(start, comma - start));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

struct Reduction {
    std::function<Json(const Json&, Json& sidecar)> apply;
};

const std::map<std::string, Reduction>& reductions() {
    static const std::map<std::string, Reduction> table{
        {"hamiltonian-to-perfect-pangram-dfa",
         {[](const Json& in, Json&) { return to_json(hamiltonian_to_perfect_pangram_dfa(graph_from_json(in))); }}},
        {"perfect-to-pangram",
         {[](const Json& in, Json&) { return to_json(Acceptor::finite_dfa(perfect_to_pangram(dfa_from_json(in)))); }}},
        {"to-cofinite",
         {[](const Json& in, Json&) { return to_json(Acceptor::cofinite_dfa(to_cofinite(dfa_from_json(in)))); }}},
        {"hamiltonian-to-3slt",
         {[](const Json& in, Json& sidecar) {
             const Graph g = graph_from_json(in);
             SltReduction r = hamiltonian_to_3slt(g);
             if (r.renamed) {
                 sidecar = {{"nodes", g.nodes()}, {"counters", r.counters}};
             }
             return to_json(r.spec);
         }}},
        {"betweenness-to-3spt",
         {[](const Json& in, Json&) { return to_json(betweenness_to_3spt(betweenness_from_json(in))); }}},
        {"universality-to-pangram-cover",
         {[](const Json& in, Json&) { return to_json(universality_to_pangram_cover(cfg_from_json(in))); }}},
    };
    return table;
}

struct CanonArgs {
    std::string alphabet;
    std::size_t length = 0;
    std::string word;
};

Json canon(const std::string& builder, const CanonArgs& a, const Limits& limits) {
    const Alphabet sigma(split_commas(a.alphabet));
    if (builder == "pangram-dfa") {
        return to_json(pangram_dfa(sigma, limits));
    }
    if (builder == "perfect-pangram-dfa") {
        return to_json(perfect_pangram_dfa(sigma, limits));
    }
    if (builder == "exact-length-dfa") {
        return to_json(exact_length_dfa(sigma, a.length));
    }
    if (builder == "not-exact-length-dfa") {
        return to_json(not_exact_length_dfa(sigma, a.length));
    }
    if (builder == "not-prefixed-dfa") {
        if (a.word.empty()) {
            throw InputError("--word: required by not-prefixed-dfa");
        }
        return to_json(not_prefixed_dfa(sigma.encode(split_commas(a.word), "--word"), sigma));
    }
    if (builder == "non-pangram-nfa") {
        return to_json(non_pangram_nfa(sigma));
    }
    if (builder == "universal-dfa") {
        return to_json(universal_dfa(sigma));
    }
    if (builder == "empty-dfa") {
        return to_json(empty_dfa(sigma));
    }
    throw InputError("builder: unknown builder \"" + builder + "\"");
}

struct GenerateArgs {
    std::uint64_t seed = 1;
    std::size_t alphabet = 2;
    std::size_t size = 3;
    std::size_t count = 1;
};

Json generate_one(const std::string& what, Corpus& c, const GenerateArgs& a) {
    if (what == "dfa") {
        return to_json(c.random_dfa(a.alphabet, a.size));
    }
    if (what == "graph") {
        return to_json(c.random_graph(a.size));
    }
    if (what == "betweenness") {
        return to_json(c.random_betweenness(std::max<std::size_t>(a.alphabet, 3), a.size));
    }
    if (what == "slt2") {
        return to_json(c.random_slt2(a.alphabet));
    }
    if (what == "spt2") {
        return to_json(c.random_spt2(a.alphabet, a.size));
    }
    if (what == "cfg") {
        return to_json(c.random_finite_cfg(a.alphabet, a.size, 6));
    }
    throw InputError("what: unknown generator \"" + what + "\"");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pangram decision procedures, reductions and oracles over JSON files", "pangram"};
    app.require_subcommand(1);

    Limits limits;
    app.add_option("--bitmask-cap", limits.max_bitmask_alphabet, "Largest alphabet for seen-set searches");
    app.add_option("--subset-cap", limits.max_subset_states, "Largest subset/product construction");
    app.add_option("--permutation-cap", limits.max_permutation_alphabet, "Largest alphabet for permutation search");
    app.add_option("--enumeration-cap", limits.max_enumeration, "Largest word enumeration");
    app.add_option("--budget", limits.step_budget, "Search step budget (0 = unbounded)");

    std::function<void()> action;

    std::string problem, input, output, name, builder, what;

    auto* decide_cmd = app.add_subcommand("decide", "Decide a problem on an acceptor document");
    decide_cmd->add_option("problem", problem, "Problem name, e.g. contains-pangram")->required();
    decide_cmd->add_option("file", input, "Acceptor JSON")->required();
    decide_cmd->callback([&] {
        action = [&] {
            const Problem p = problem_arg(problem);
            const Acceptor a = acceptor_from_json(read_json_file(input));
            emit(out, decision_to_json(decide(p, a, limits), a.alphabet()));
        };
    });

    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reduction and write the result");
    reduce_cmd->add_option("name", name, "Reduction name")->required();
    reduce_cmd->add_option("input", input, "Input JSON")->required();
    reduce_cmd->add_option("output", output, "Output JSON")->required();
    reduce_cmd->callback([&] {
        action = [&] {
            auto it = reductions().find(name);
            if (it == reductions().end()) {
                throw InputError("name: unknown reduction \"" + name + "\"");
            }
            Json sidecar;
            write_json_file(output, it->second.apply(read_json_file(input), sidecar));
            Json report{{"reduction", name}, {"output", output}};
            if (!sidecar.is_null()) {
                const std::string map_path = output + ".map.json";
                write_json_file(map_path, sidecar);
                report["map"] = map_path;
            }
            emit(out, report);
        };
    });

    CanonArgs canon_args;
    auto* canon_cmd = app.add_subcommand("canon", "Emit a canonical automaton");
    canon_cmd->add_option("builder", builder, "pangram-dfa, perfect-pangram-dfa, exact-length-dfa, ...")
        ->required();
    canon_cmd->add_option("--alphabet", canon_args.alphabet, "Comma-separated symbols")->required();
    canon_cmd->add_option("--length", canon_args.length, "Length for the length counters");
    canon_cmd->add_option("--word", canon_args.word, "Comma-separated word for not-prefixed-dfa");
    canon_cmd->callback([&] { action = [&] { emit(out, canon(builder, canon_args, limits)); }; });

    auto* minimize_cmd = app.add_subcommand("minimize", "Minimize a DFA");
    minimize_cmd->add_option("input", input, "DFA JSON")->required();
    minimize_cmd->add_option("output", output, "Output file (default: standard output)");
    minimize_cmd->callback([&] {
        action = [&] {
            const Acceptor a = acceptor_from_json(read_json_file(input));
            const Dfa* x = a.as<Dfa>();
            if (!x) {
                throw InputError("kind: minimize expects a dfa document");
            }
            Json result = to_json(minimize(*x));
            if (output.empty()) {
                emit(out, result);
            } else {
                write_json_file(output, result);
                emit(out, Json{{"output", output}, {"states", result["states"].size()}});
            }
        };
    });

    std::size_t max_len = 8;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
    oracle_cmd->add_option("problem", problem, "Problem name, hamiltonian or betweenness")->required();
    oracle_cmd->add_option("file", input, "Input JSON")->required();
    oracle_cmd->add_option("--max-len", max_len, "Longest word enumerated");
    oracle_cmd->callback([&] {
        action = [&] {
            const Json doc = read_json_file(input);
            if (problem == "hamiltonian") {
                const Graph g = graph_from_json(doc);
                const Verdict v = hamiltonian_bruteforce(g);
                Json j{{"problem", problem}, {"answer", v.answer}};
                if (v.witness) {
                    j["witness"] = Alphabet(g.nodes()).decode(*v.witness);
                }
                emit(out, j);
                return;
            }
            if (problem == "betweenness") {
                const BetweennessInstance b = betweenness_from_json(doc);
                const Verdict v = betweenness_bruteforce(b);
                Json j{{"problem", problem}, {"answer", v.answer}};
                if (v.witness) {
                    j["witness"] = b.elements.decode(*v.witness);
                }
                emit(out, j);
                return;
            }
            const Problem p = problem_arg(problem);
            const Acceptor a = acceptor_from_json(doc);
            emit(out, verdict_to_json(p, bruteforce(p, a, max_len, limits), a.alphabet()));
        };
    });

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Emit seeded random instances");
    generate_cmd->add_option("what", what, "dfa, graph, betweenness, slt2, spt2 or cfg")->required();
    generate_cmd->add_option("--seed", gen.seed, "Random seed");
    generate_cmd->add_option("--alphabet", gen.alphabet, "Alphabet size");
    generate_cmd->add_option("--size", gen.size, "States, nodes, constraints or nonterminals");
    generate_cmd->add_option("--count", gen.count, "Number of instances (array output when > 1)");
    generate_cmd->callback([&] {
        action = [&] {
            Corpus c(gen.seed);
            if (gen.count == 1) {
                emit(out, generate_one(what, c, gen));
                return;
            }
            Json all = Json::array();
            for (std::size_t i = 0; i < gen.count; ++i) {
                all.push_back(generate_one(what, c, gen));
            }
            emit(out, all);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (action) {
            action();
        }
        return ok;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const SizeLimitError& e) {
        err << "limit: " << e.what() << '\n';
        return limit_error;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return failure;
    }
}

} // namespace pangram::cli
