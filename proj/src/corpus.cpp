#include "pangram/corpus.hpp"

#include <algorithm>

#include "pangram/error.hpp"

namespace pangram {

std::size_t Corpus::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool Corpus::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Alphabet letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
    }
    return Alphabet(std::move(out));
}

namespace {

std::vector<std::string> numbered(std::size_t n, std::size_t from) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i + from));
    }
    return out;
}

} // namespace

Dfa dfa_from_table(const Alphabet& sigma, std::vector<State> table, std::uint64_t accepting_mask) {
    const std::size_t n = table.size() / sigma.size();
    std::vector<bool> accepting(n);
    for (std::size_t q = 0; q < n; ++q) {
        accepting[q] = (accepting_mask >> q) & 1;
    }
    return Dfa(sigma, numbered(n, 0), 0, std::move(accepting), std::move(table));
}

Dfa Corpus::random_dfa(std::size_t sigma, std::size_t states, double accepting) {
    std::vector<State> table(states * sigma);
    for (auto& t : table) {
        t = static_cast<State>(uniform(0, states - 1));
    }
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < states; ++q) {
        if (coin(accepting)) {
            mask |= std::uint64_t{1} << q;
        }
    }
    return dfa_from_table(letters(sigma), std::move(table), mask);
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Graph::Edge> edges;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) {
                continue;
            }
            if ((mask >> bit++) & 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(numbered(n, 1), std::move(edges));
}

Graph Corpus::random_graph(std::size_t nodes, double edge) {
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < nodes; ++u) {
        for (std::size_t v = 0; v < nodes; ++v) {
            if (u != v && coin(edge)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(numbered(nodes, 1), std::move(edges));
}

BetweennessInstance Corpus::random_betweenness(std::size_t elements, std::size_t constraints) {
    if (elements < 3) {
        throw InputError("random_betweenness: need at least 3 elements");
    }
    std::vector<BetweennessInstance::Constraint> out;
    for (std::size_t i = 0; i < constraints; ++i) {
        std::vector<Letter> pick(elements);
        for (std::size_t j = 0; j < elements; ++j) {
            pick[j] = static_cast<Letter>(j);
        }
        std::shuffle(pick.begin(), pick.end(), rng_);
        out.push_back({pick[0], pick[1], pick[2]});
    }
    return BetweennessInstance(letters(elements), std::move(out));
}

SltSpec Corpus::random_slt2(std::size_t sigma, double density) {
    std::set<Word> s, i, e;
    for (Letter a = 0; a < sigma; ++a) {
        if (coin(density)) {
            s.insert({a});
        }
        if (coin(density)) {
            e.insert({a});
        }
        for (Letter b = 0; b < sigma; ++b) {
            if (coin(density)) {
                i.insert({a, b});
            }
        }
    }
    return SltSpec(2, letters(sigma), std::move(s), std::move(i), std::move(e));
}

SptSpec Corpus::random_spt2(std::size_t sigma, std::size_t forbidden) {
    std::set<Word> f;
    for (std::size_t i = 0; i < forbidden; ++i) {
        const auto a = static_cast<Letter>(uniform(0, sigma - 1));
        const auto b = static_cast<Letter>(uniform(0, sigma - 1));
        if (coin(0.1)) {
            f.insert({a});
        } else {
            f.insert({a, b});
        }
    }
    return SptSpec(2, letters(sigma), std::move(f));
}

Cfg Corpus::random_finite_cfg(std::size_t sigma, std::size_t nonterminals, std::size_t max_len) {
    // Track an upper bound on each nonterminal's longest word, filling from the
    // last nonterminal backward, so every rule keeps the total within max_len.
    std::vector<std::size_t> longest(nonterminals, 0);
    std::vector<Rule> rules;
    std::vector<std::string> names;
    for (std::size_t n = 0; n < nonterminals; ++n) {
        names.push_back(n == 0 ? "S" : "N" + std::to_string(n));
    }
    for (std::size_t n = nonterminals; n-- > 0;) {
        const std::size_t count = uniform(1, 3);
        for (std::size_t r = 0; r < count; ++r) {
            Rule rule{static_cast<std::uint32_t>(n), {}};
            std::size_t budget = max_len;
            const std::size_t symbols = uniform(0, 3);
            for (std::size_t k = 0; k < symbols; ++k) {
                if (n + 1 < nonterminals && coin(0.4)) {
                    const auto m = static_cast<std::uint32_t>(uniform(n + 1, nonterminals - 1));
                    if (longest[m] <= budget) {
                        budget -= longest[m];
                        rule.rhs.push_back(GrammarSymbol::nonterminal(m));
                        continue;
                    }
                }
                if (budget > 0) {
                    --budget;
                    rule.rhs.push_back(GrammarSymbol::terminal(static_cast<Letter>(uniform(0, sigma - 1))));
                }
            }
            longest[n] = std::max(longest[n], max_len - budget);
            rules.push_back(std::move(rule));
        }
    }
    std::reverse(rules.begin(), rules.end());
    return Cfg(letters(sigma), std::move(names), 0, std::move(rules));
}

} // namespace pangram
