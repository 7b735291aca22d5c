#include "pangram/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pangram/error.hpp"

namespace pangram {

namespace {

constexpr std::size_t max_bruteforce_elements = 10;

bool each_permutation(std::size_t n, const std::function<bool(const Word&)>& visit) {
    Word perm(n);
    std::iota(perm.begin(), perm.end(), Letter{0});
    do {
        if (visit(perm)) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Rules of the form N -> terminals, optionally followed by one nonterminal.
bool right_linear(const Cfg& g) {
    for (const auto& r : g.rules()) {
        for (std::size_t i = 0; i + 1 < r.rhs.size(); ++i) {
            if (!r.rhs[i].is_terminal()) {
                return false;
            }
        }
    }
    return true;
}

// Linear-time membership for right-linear grammars: simulate the set of
// dotted rules (rule, position) like an NFA.
bool right_linear_member(const Cfg& g, const Word& w) {
    std::vector<std::vector<std::uint32_t>> by_lhs(g.nonterminal_count());
    for (std::uint32_t r = 0; r < g.rules().size(); ++r) {
        by_lhs[g.rules()[r].lhs].push_back(r);
    }
    using Item = std::pair<std::uint32_t, std::uint32_t>;
    std::set<Item> current;
    bool accepted = false;
    std::vector<bool> expanded(g.nonterminal_count());
    auto close = [&](std::set<Item> items) {
        std::fill(expanded.begin(), expanded.end(), false);
        accepted = false;
        std::vector<Item> work(items.begin(), items.end());
        while (!work.empty()) {
            auto [r, dot] = work.back();
            work.pop_back();
            const auto& rhs = g.rules()[r].rhs;
            if (dot == rhs.size()) {
                accepted = true;
            } else if (!rhs[dot].is_terminal() && !expanded[rhs[dot].index]) {
                expanded[rhs[dot].index] = true;
                for (std::uint32_t next : by_lhs[rhs[dot].index]) {
                    if (items.emplace(next, 0).second) {
                        work.emplace_back(next, 0);
                    }
                }
            }
        }
        return items;
    };
    std::set<Item> start;
    for (std::uint32_t r : by_lhs[g.start()]) {
        start.emplace(r, 0);
    }
    current = close(std::move(start));
    for (Letter a : w) {
        std::set<Item> next;
        for (auto [r, dot] : current) {
            const auto& rhs = g.rules()[r].rhs;
            if (dot < rhs.size() && rhs[dot].is_terminal() && rhs[dot].index == a) {
                next.emplace(r, dot + 1);
            }
        }
        current = close(std::move(next));
        if (current.empty()) {
            return false;
        }
    }
    return accepted;
}

} // namespace

void for_each_word(std::size_t sigma, std::size_t max_len, const Limits& limits,
                   const std::function<bool(const Word&)>& visit) {
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total += layer;
        if (total > limits.max_enumeration) {
            throw SizeLimitError("enumeration: more than " + std::to_string(limits.max_enumeration) +
                                 " words up to length " + std::to_string(max_len));
        }
        if (len < max_len && layer > limits.max_enumeration / std::max<std::size_t>(sigma, 1)) {
            layer = limits.max_enumeration + 1;
        } else {
            layer *= sigma;
        }
    }
    for (std::size_t len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        while (true) {
            if (!visit(w)) {
                return;
            }
            // Odometer increment.
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == sigma) {
                w[--i] = 0;
            }
            if (i == 0) {
                break;
            }
            ++w[i - 1];
        }
    }
}

std::vector<Word> enumerate_language(const Acceptor& a, std::size_t max_len, const Limits& limits) {
    auto member = make_membership(a);
    std::vector<Word> out;
    for_each_word(a.alphabet().size(), max_len, limits, [&](const Word& w) {
        if (member(w)) {
            out.push_back(w);
        }
        return true;
    });
    return out;
}

namespace {

// First word of length <= max_len satisfying `hit`, in length-lex order.
std::optional<Word> first_word(const Acceptor& a, std::size_t max_len, const Limits& limits,
                               const std::function<bool(const Word&)>& hit) {
    std::optional<Word> found;
    for_each_word(a.alphabet().size(), max_len, limits, [&](const Word& w) {
        if (hit(w)) {
            found = w;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

Verdict contains_pangram_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits) {
    auto member = make_membership(a);
    const Alphabet& sigma = a.alphabet();
    auto w = first_word(a, max_len, limits, [&](const Word& w) { return is_pangram(w, sigma) && member(w); });
    return w ? Verdict::yes(w) : Verdict::no();
}

Verdict contains_perfect_pangram_bruteforce(const Acceptor& a, const Limits& limits) {
    const std::size_t n = a.alphabet().size();
    if (n > limits.max_permutation_alphabet) {
        throw SizeLimitError("contains_perfect_pangram_bruteforce: alphabet exceeds the permutation cap");
    }
    auto member = make_membership(a);
    std::optional<Word> found;
    each_permutation(n, [&](const Word& w) {
        if (member(w)) {
            found = w;
        }
        return found.has_value();
    });
    return found ? Verdict::yes(found) : Verdict::no();
}

Verdict covers_pangrams_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits) {
    auto member = make_membership(a);
    const Alphabet& sigma = a.alphabet();
    auto w = first_word(a, max_len, limits, [&](const Word& w) { return is_pangram(w, sigma) && !member(w); });
    return w ? Verdict::no(w) : Verdict::yes();
}

Verdict covers_perfect_pangrams_bruteforce(const Acceptor& a, const Limits& limits) {
    const std::size_t n = a.alphabet().size();
    if (n > limits.max_permutation_alphabet) {
        throw SizeLimitError("covers_perfect_pangrams_bruteforce: alphabet exceeds the permutation cap");
    }
    auto member = make_membership(a);
    std::optional<Word> missing;
    each_permutation(n, [&](const Word& w) {
        if (!member(w)) {
            missing = w;
        }
        return missing.has_value();
    });
    return missing ? Verdict::no(missing) : Verdict::yes();
}

Verdict all_pangrams_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits) {
    auto member = make_membership(a);
    const Alphabet& sigma = a.alphabet();
    auto w = first_word(a, max_len, limits, [&](const Word& w) { return member(w) && !is_pangram(w, sigma); });
    return w ? Verdict::no(w) : Verdict::yes();
}

Verdict all_perfect_pangrams_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits) {
    auto member = make_membership(a);
    const Alphabet& sigma = a.alphabet();
    auto w = first_word(a, max_len, limits,
                        [&](const Word& w) { return member(w) && !is_perfect_pangram(w, sigma); });
    return w ? Verdict::no(w) : Verdict::yes();
}

Verdict bruteforce(Problem p, const Acceptor& a, std::size_t max_len, const Limits& limits) {
    switch (p) {
    case Problem::contains_pangram:
        return contains_pangram_bruteforce(a, max_len, limits);
    case Problem::contains_perfect_pangram:
        return contains_perfect_pangram_bruteforce(a, limits);
    case Problem::covers_pangrams:
        return covers_pangrams_bruteforce(a, max_len, limits);
    case Problem::covers_perfect_pangrams:
        return covers_perfect_pangrams_bruteforce(a, limits);
    case Problem::all_pangrams:
        return all_pangrams_bruteforce(a, max_len, limits);
    case Problem::all_perfect_pangrams:
        return all_perfect_pangrams_bruteforce(a, max_len, limits);
    }
    throw InputError("unknown problem");
}

Verdict hamiltonian_bruteforce(const Graph& g) {
    if (g.size() > max_bruteforce_elements) {
        throw SizeLimitError("hamiltonian_bruteforce: more than 10 nodes");
    }
    if (g.size() == 0) {
        return Verdict::no();
    }
    std::optional<Word> path;
    each_permutation(g.size(), [&](const Word& order) {
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            if (!g.has_edge(order[i], order[i + 1])) {
                return false;
            }
        }
        path = order;
        return true;
    });
    return path ? Verdict::yes(path) : Verdict::no();
}

Verdict betweenness_bruteforce(const BetweennessInstance& b) {
    const std::size_t n = b.elements.size();
    if (n > max_bruteforce_elements) {
        throw SizeLimitError("betweenness_bruteforce: more than 10 elements");
    }
    std::optional<Word> found;
    std::vector<std::size_t> position(n);
    each_permutation(n, [&](const Word& order) {
        for (std::size_t i = 0; i < n; ++i) {
            position[order[i]] = i;
        }
        for (const auto& [x, y, z] : b.constraints) {
            const bool between = (position[x] < position[y] && position[y] < position[z]) ||
                                 (position[z] < position[y] && position[y] < position[x]);
            if (!between) {
                return false;
            }
        }
        found = order;
        return true;
    });
    return found ? Verdict::yes(found) : Verdict::no();
}

std::set<Word> derive_words(const Cfg& g, std::size_t max_len) {
    std::vector<std::set<Word>> language(g.nonterminal_count());
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& rule : g.rules()) {
            // All concatenations of one word per rhs symbol, truncated at max_len.
            std::set<Word> partial{Word{}};
            for (const auto& s : rule.rhs) {
                std::set<Word> next;
                for (const auto& prefix : partial) {
                    if (s.is_terminal()) {
                        if (prefix.size() < max_len) {
                            Word w = prefix;
                            w.push_back(s.index);
                            next.insert(std::move(w));
                        }
                        continue;
                    }
                    for (const auto& piece : language[s.index]) {
                        if (prefix.size() + piece.size() <= max_len) {
                            Word w = prefix;
                            w.insert(w.end(), piece.begin(), piece.end());
                            next.insert(std::move(w));
                        }
                    }
                }
                partial = std::move(next);
            }
            for (const auto& w : partial) {
                changed |= language[rule.lhs].insert(w).second;
            }
        }
    }
    return language[g.start()];
}

bool validate_witness(Problem p, const Acceptor& a, const Verdict& v, std::string* why) {
    auto fail = [&](std::string reason) {
        if (why) {
            *why = std::move(reason);
        }
        return false;
    };
    if (!v.witness) {
        return true;
    }
    const Word& w = *v.witness;
    const Alphabet& sigma = a.alphabet();
    for (Letter l : w) {
        if (l >= sigma.size()) {
            return fail("witness letter outside the alphabet");
        }
    }
    const Cfg* grammar = a.as<Cfg>();
    const bool accepted =
        grammar && right_linear(*grammar) ? right_linear_member(*grammar, w) : make_membership(a)(w);
    switch (p) {
    case Problem::contains_pangram:
    case Problem::contains_perfect_pangram: {
        if (!v.answer) {
            return fail("witness attached to a negative existential answer");
        }
        const bool perfect = p == Problem::contains_perfect_pangram;
        if (perfect ? !is_perfect_pangram(w, sigma) : !is_pangram(w, sigma)) {
            return fail("witness does not satisfy the pangram predicate");
        }
        if (!accepted) {
            if (const auto* g = a.as<Cfg>(); g && !perfect && !v.note.empty()) {
                // Closure-only witnesses must at least be a subsequence of some member.
                if (cyk_member(downward_closure(*g), w)) {
                    return true;
                }
            }
            return fail("witness is not accepted");
        }
        return true;
    }
    case Problem::covers_pangrams:
    case Problem::covers_perfect_pangrams: {
        if (v.answer) {
            return fail("counterexample attached to a positive universal answer");
        }
        const bool perfect = p == Problem::covers_perfect_pangrams;
        if (perfect ? !is_perfect_pangram(w, sigma) : !is_pangram(w, sigma)) {
            return fail("counterexample is not a pangram of the required kind");
        }
        if (accepted) {
            return fail("counterexample is accepted");
        }
        return true;
    }
    case Problem::all_pangrams:
    case Problem::all_perfect_pangrams: {
        if (v.answer) {
            return fail("counterexample attached to a positive universal answer");
        }
        if (!accepted) {
            return fail("counterexample is not accepted");
        }
        const bool perfect = p == Problem::all_perfect_pangrams;
        if (perfect ? is_perfect_pangram(w, sigma) : is_pangram(w, sigma)) {
            return fail("counterexample satisfies the predicate");
        }
        return true;
    }
    }
    return fail("unknown problem");
}

} // namespace pangram
