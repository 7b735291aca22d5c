#include "pangram/reductions.hpp"

#include <set>

#include "pangram/error.hpp"
#include "pangram/names.hpp"

namespace pangram {

BetweennessInstance::BetweennessInstance(Alphabet elements_, std::vector<Constraint> constraints_)
    : elements(std::move(elements_)), constraints(std::move(constraints_)) {
    elements.require_nonempty("betweenness.elements");
    for (const auto& [a, b, c] : constraints) {
        if (a >= elements.size() || b >= elements.size() || c >= elements.size()) {
            throw InputError("betweenness.constraints: element index out of range");
        }
        if (a == b || b == c || a == c) {
            throw InputError("betweenness.constraints: triple (" + elements[a] + ", " + elements[b] + ", " +
                             elements[c] + ") must have distinct elements");
        }
    }
}

Dfa hamiltonian_to_perfect_pangram_dfa(const Graph& g) {
    if (g.size() == 0) {
        throw InputError("hamiltonian_to_perfect_pangram_dfa: graph needs at least one node");
    }
    const std::size_t n = g.size();
    NameAllocator names(g.nodes());
    std::vector<std::string> states;
    states.push_back(names.fresh("q_src"));
    states.insert(states.end(), g.nodes().begin(), g.nodes().end());
    states.push_back(names.fresh("q_fail"));
    const State fail = static_cast<State>(n + 1);
    auto node_state = [](std::size_t v) { return static_cast<State>(v + 1); };

    std::vector<State> table;
    for (std::size_t u = 0; u < n; ++u) {
        table.push_back(node_state(u));
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            table.push_back(g.has_edge(v, u) ? node_state(u) : fail);
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        table.push_back(fail);
    }
    std::vector<bool> accepting(n + 2, true);
    accepting[fail] = false;
    return Dfa(Alphabet(g.nodes()), std::move(states), 0, std::move(accepting), std::move(table));
}

Dfa perfect_to_pangram(const Dfa& x) {
    return product_dfa(x, exact_length_dfa(x.alphabet(), x.alphabet().size()), ProductMode::intersection);
}

Dfa to_cofinite(const Dfa& x) {
    return product_dfa(x, not_exact_length_dfa(x.alphabet(), x.alphabet().size()), ProductMode::union_of);
}

std::vector<std::string> SltReduction::path_of(const Word& witness) const {
    const std::size_t nodes = spec.alphabet().size() - counters.size();
    std::vector<std::string> path;
    for (Letter l : witness) {
        if (l < nodes) {
            path.push_back(spec.alphabet()[l]);
        }
    }
    return path;
}

SltReduction hamiltonian_to_3slt(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) {
        throw InputError("hamiltonian_to_3slt: graph needs at least one node");
    }
    const std::set<std::string> node_names(g.nodes().begin(), g.nodes().end());
    std::string prefix;
    bool renamed = false;
    for (bool clash = true; clash;) {
        clash = false;
        for (std::size_t k = 1; k <= n && !clash; ++k) {
            clash = node_names.contains(prefix + std::to_string(k));
        }
        if (clash) {
            prefix += "#";
            renamed = true;
        }
    }
    std::vector<std::string> symbols = g.nodes();
    std::vector<std::string> counters;
    for (std::size_t k = 1; k <= n; ++k) {
        counters.push_back(prefix + std::to_string(k));
        symbols.push_back(counters.back());
    }
    auto counter = [n](std::size_t k) { return static_cast<Letter>(n + k - 1); };
    auto node = [](std::size_t v) { return static_cast<Letter>(v); };

    std::set<Word> prefixes, infixes, suffixes;
    for (std::size_t v = 0; v < n; ++v) {
        prefixes.insert({node(v), counter(1)});
        suffixes.insert({node(v), counter(n)});
    }
    for (const auto& [v, u] : g.edges()) {
        for (std::size_t k = 1; k <= n; ++k) {
            infixes.insert({node(v), counter(k), node(u)});
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t k = 1; k < n; ++k) {
            infixes.insert({counter(k), node(v), counter(k + 1)});
        }
    }
    return SltReduction{SltSpec(3, Alphabet(std::move(symbols)), std::move(prefixes), std::move(infixes),
                                std::move(suffixes)),
                        std::move(counters), renamed};
}

SptSpec betweenness_to_3spt(const BetweennessInstance& b) {
    std::set<Word> forbidden;
    for (const auto& [x, y, z] : b.constraints) {
        forbidden.insert({x, z, y});
        forbidden.insert({z, x, y});
        forbidden.insert({y, x, z});
        forbidden.insert({y, z, x});
    }
    return SptSpec(3, b.elements, std::move(forbidden));
}

Cfg universality_to_pangram_cover(const Cfg& g) {
    const Alphabet& sigma = g.terminals();
    Word w(sigma.size());
    for (Letter a = 0; a < sigma.size(); ++a) {
        w[a] = a;
    }
    return union_cfg(concat_word_cfg(w, g), dfa_to_cfg(not_prefixed_dfa(w, sigma)));
}

} // namespace pangram
