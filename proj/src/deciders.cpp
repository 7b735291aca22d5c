#include "pangram/deciders.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "pangram/error.hpp"

namespace pangram {

namespace {

constexpr std::string_view problem_names[] = {
    "contains-pangram", "contains-perfect-pangram", "covers-pangrams",
    "covers-perfect-pangrams", "all-pangrams", "all-perfect-pangrams",
};

void check_permutation_cap(std::size_t sigma, const Limits& limits, std::string_view what) {
    if (sigma > limits.max_permutation_alphabet) {
        throw SizeLimitError(std::string(what) + ": alphabet of size " + std::to_string(sigma) +
                             " exceeds the permutation cap of " +
                             std::to_string(limits.max_permutation_alphabet));
    }
}

Dfa to_dfa(const Acceptor& a, const Limits& limits) {
    if (const auto* x = a.as<Dfa>()) {
        return *x;
    }
    if (const auto* x = a.as<Nfa>()) {
        return determinize(*x, limits);
    }
    if (const auto* x = a.as<SltSpec>()) {
        return slt_to_dfa(*x);
    }
    if (const auto* x = a.as<SptSpec>()) {
        return spt_to_dfa(*x, limits);
    }
    throw InputError("no finite-automaton form for a context-free grammar");
}

Nfa to_search_nfa(const Acceptor& a) {
    if (const auto* x = a.as<Nfa>()) {
        return *x;
    }
    if (const auto* x = a.as<Dfa>()) {
        return to_nfa(*x);
    }
    if (const auto* x = a.as<SltSpec>()) {
        return to_nfa(slt_to_dfa(*x));
    }
    throw InputError("seen-set search needs a finite automaton");
}

Cfg to_cfg(const Acceptor& a, const Limits& limits) {
    if (const auto* x = a.as<Cfg>()) {
        return *x;
    }
    if (const auto* x = a.as<Nfa>()) {
        return dfa_to_cfg(*x);
    }
    return dfa_to_cfg(to_dfa(a, limits));
}

// Lexicographic enumeration of the words of length `len` that contain `u` as a
// subsequence; stops when `visit` returns true.
bool for_each_supersequence(const Word& u, std::size_t sigma, std::size_t len,
                            const std::function<bool(const Word&)>& visit) {
    Word w(len);
    std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t pos, std::size_t matched) {
        if (pos == len) {
            return matched == u.size() && visit(w);
        }
        for (Letter a = 0; a < sigma; ++a) {
            const std::size_t next = matched + (matched < u.size() && u[matched] == a);
            if (len - pos - 1 < u.size() - next) {
                continue;
            }
            w[pos] = a;
            if (extend(pos + 1, next)) {
                return true;
            }
        }
        return false;
    };
    return extend(0, 0);
}

// A pangram of L(g) given a perfect pangram u of the downward closure.
Verdict recover_grammar_pangram(const Cfg& g, const Word& u, const Limits& limits) {
    const CykParser parser(g);
    const std::size_t sigma = g.terminals().size();
    const std::size_t bound = sigma + 2 * parser.cnf().grammar.nonterminal_count();
    std::uint64_t checks = 0;
    std::optional<Word> found;
    for (std::size_t len = u.size(); len <= bound && !found && checks < limits.max_recovery_checks; ++len) {
        for_each_supersequence(u, sigma, len, [&](const Word& w) {
            if (++checks > limits.max_recovery_checks) {
                return true;
            }
            if (parser.accepts(w)) {
                found = w;
                return true;
            }
            return false;
        });
    }
    if (found) {
        return Verdict::yes(std::move(found));
    }
    if (auto w = member_with_subsequence(g, u, limits)) {
        return Verdict::yes(std::move(w));
    }
    return Verdict::yes(u, "witness belongs to the downward closure only");
}

Verdict dfa_covers_pangrams(const Dfa& x, const Limits& limits) {
    const Dfa missing = product_dfa(complement_dfa(x), pangram_dfa(x.alphabet(), limits),
                                    ProductMode::intersection);
    Verdict empty = is_empty(missing);
    return empty.answer ? Verdict::yes() : Verdict::no(empty.witness);
}

Word repeat_then_complete(const Alphabet& sigma, std::size_t repeats) {
    Word w(std::max<std::size_t>(repeats, 1), 0);
    for (Letter a = 1; a < sigma.size(); ++a) {
        w.push_back(a);
    }
    return w;
}

// f followed by the letters it lacks, in alphabet order.
Word complete_to_pangram(const Word& f, std::size_t sigma) {
    Word w = f;
    std::vector<bool> present(sigma, false);
    for (Letter a : f) {
        present[a] = true;
    }
    for (Letter a = 0; a < sigma; ++a) {
        if (!present[a]) {
            w.push_back(a);
        }
    }
    return w;
}

Verdict trivial_verdict(Problem p, const Acceptor& a, const Limits& limits) {
    const Alphabet& sigma = a.alphabet();
    if (const auto* x = a.as<Dfa>()) {
        const std::size_t n = x->state_count();
        if (a.finite && p == Problem::covers_pangrams) {
            // Accepted words are shorter than the state count.
            return Verdict::no(repeat_then_complete(sigma, n));
        }
        if (a.cofinite) {
            // Every word of length >= state count is accepted.
            const Word long_word(std::max(n, sigma.size() + 1), 0);
            if (p == Problem::all_perfect_pangrams) {
                return Verdict::no(long_word);
            }
            if (p == Problem::all_pangrams && sigma.size() >= 2) {
                return Verdict::no(long_word);
            }
        }
        return solve(p, a, limits);
    }
    if (const auto* s = a.as<SptSpec>()) {
        const auto& forbidden = s->forbidden();
        switch (p) {
        case Problem::covers_pangrams:
            if (forbidden.empty()) {
                return Verdict::yes();
            }
            return Verdict::no(complete_to_pangram(*forbidden.begin(), sigma.size()));
        case Problem::covers_perfect_pangrams:
            for (const auto& f : forbidden) {
                std::vector<Letter> sorted(f);
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                    return Verdict::no(complete_to_pangram(f, sigma.size()));
                }
            }
            return Verdict::yes();
        case Problem::all_pangrams:
        case Problem::all_perfect_pangrams:
            // Downward closed: nonempty iff the empty word is a member.
            if (forbidden.contains(Word{})) {
                return Verdict::yes();
            }
            return Verdict::no(Word{});
        default:
            break;
        }
    }
    return solve(p, a, limits);
}

} // namespace

std::string_view to_string(Problem p) {
    return problem_names[static_cast<std::size_t>(p)];
}

std::optional<Problem> parse_problem(std::string_view name) {
    for (Problem p : all_problems) {
        if (to_string(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

bool is_universal(Problem p) {
    return p != Problem::contains_pangram && p != Problem::contains_perfect_pangram;
}

Verdict seen_set_search(const Nfa& m, bool perfect, const Limits& limits) {
    const std::size_t n = m.alphabet().size();
    if (n > limits.max_bitmask_alphabet || n > 32) {
        throw SizeLimitError("seen-set search: alphabet of size " + std::to_string(n) +
                             " exceeds the bitmask cap of " + std::to_string(limits.max_bitmask_alphabet));
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto key = [n](State q, std::uint64_t mask) { return (std::uint64_t{q} << n) | mask; };
    struct Parent {
        std::uint64_t key;
        Letter via;
    };
    constexpr std::uint64_t root = ~std::uint64_t{0};
    std::unordered_map<std::uint64_t, Parent> parent;
    std::deque<std::uint64_t> queue;
    StepCounter steps(limits, "seen-set search");

    auto trace = [&](std::uint64_t k) {
        Word w;
        for (Parent p = parent.at(k); p.key != root; p = parent.at(p.key)) {
            w.push_back(p.via);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    for (State q : m.initials()) {
        if (parent.emplace(key(q, 0), Parent{root, 0}).second) {
            queue.push_back(key(q, 0));
        }
    }
    while (!queue.empty()) {
        const std::uint64_t k = queue.front();
        queue.pop_front();
        steps.tick();
        const auto q = static_cast<State>(k >> n);
        const std::uint64_t mask = k & full;
        for (Letter a = 0; a < n; ++a) {
            const std::uint64_t bit = std::uint64_t{1} << a;
            if (perfect && (mask & bit)) {
                continue;
            }
            for (State r : m.successors(q, a)) {
                const std::uint64_t next = key(r, mask | bit);
                if (!parent.emplace(next, Parent{k, a}).second) {
                    continue;
                }
                if ((mask | bit) == full && m.is_accepting(r)) {
                    Word w = trace(k);
                    w.push_back(a);
                    return Verdict::yes(std::move(w));
                }
                queue.push_back(next);
            }
        }
    }
    return Verdict::no();
}

std::optional<Word> first_permutation(std::size_t sigma, const Limits& limits,
                                      const std::function<bool(const Word&)>& visit) {
    check_permutation_cap(sigma, limits, "permutation enumeration");
    StepCounter steps(limits, "permutation enumeration");
    Word perm(sigma);
    std::iota(perm.begin(), perm.end(), Letter{0});
    do {
        steps.tick();
        if (visit(perm)) {
            return perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Verdict contains_perfect_pangram(const Acceptor& a, const Limits& limits) {
    if (a.as<Dfa>() || a.as<Nfa>() || a.as<SltSpec>()) {
        return seen_set_search(to_search_nfa(a), true, limits);
    }
    if (const auto* s = a.as<SptSpec>(); s && s->k() <= 2) {
        return spt2_contains_pangram(*s);
    }
    auto member = make_membership(a);
    auto hit = first_permutation(a.alphabet().size(), limits, member);
    return hit ? Verdict::yes(std::move(hit)) : Verdict::no();
}

Verdict contains_pangram(const Acceptor& a, const Limits& limits) {
    if (a.cofinite) {
        validate_tags(a);
        // Every word at least as long as the state count is accepted.
        return Verdict::yes(repeat_then_complete(a.alphabet(), a.as<Dfa>()->state_count()));
    }
    if (const auto* s = a.as<SltSpec>(); s && s->k() == 2) {
        return slt2_contains_pangram(*s);
    }
    if (a.as<Dfa>() || a.as<Nfa>() || a.as<SltSpec>()) {
        return seen_set_search(to_search_nfa(a), false, limits);
    }
    if (a.as<SptSpec>()) {
        return contains_perfect_pangram(a, limits);
    }
    const Cfg& g = *a.as<Cfg>();
    Verdict closure = contains_perfect_pangram(Acceptor(downward_closure(g)), limits);
    if (!closure.answer) {
        return Verdict::no();
    }
    return recover_grammar_pangram(g, *closure.witness, limits);
}

Verdict covers_perfect_pangrams(const Acceptor& a, const Limits& limits) {
    auto member = make_membership(a);
    auto miss = first_permutation(a.alphabet().size(), limits, [&](const Word& w) { return !member(w); });
    return miss ? Verdict::no(std::move(miss)) : Verdict::yes();
}

Verdict covers_pangrams(const Acceptor& a, const Limits& limits) {
    if (a.as<Cfg>()) {
        throw UndecidableProblem(
            "covers-pangrams is undecidable for context-free grammars (it encodes universality)");
    }
    return dfa_covers_pangrams(to_dfa(a, limits), limits);
}

Verdict all_pangrams(const Acceptor& a, const Limits& limits) {
    return subset_of_pangrams(to_cfg(a, limits), limits);
}

Verdict all_perfect_pangrams(const Acceptor& a, const Limits& limits) {
    return subset_of_perfect_pangrams(to_cfg(a, limits), limits);
}

Verdict solve(Problem p, const Acceptor& a, const Limits& limits) {
    switch (p) {
    case Problem::contains_pangram:
        return contains_pangram(a, limits);
    case Problem::contains_perfect_pangram:
        return contains_perfect_pangram(a, limits);
    case Problem::covers_pangrams:
        return covers_pangrams(a, limits);
    case Problem::covers_perfect_pangrams:
        return covers_perfect_pangrams(a, limits);
    case Problem::all_pangrams:
        return all_pangrams(a, limits);
    case Problem::all_perfect_pangrams:
        return all_perfect_pangrams(a, limits);
    }
    throw InputError("unknown problem");
}

CellKind table_cell(Problem p, const Acceptor& a) {
    if (a.as<Cfg>() && p == Problem::covers_pangrams) {
        return CellKind::undecidable;
    }
    if (a.as<Dfa>()) {
        if (a.cofinite && (p == Problem::contains_pangram || p == Problem::all_pangrams ||
                           p == Problem::all_perfect_pangrams)) {
            return CellKind::trivial;
        }
        if (a.finite && p == Problem::covers_pangrams) {
            return CellKind::trivial;
        }
    }
    if (a.as<SltSpec>() && (p == Problem::covers_pangrams || p == Problem::covers_perfect_pangrams)) {
        return CellKind::trivial;
    }
    if (a.as<SptSpec>() && is_universal(p)) {
        return CellKind::trivial;
    }
    return CellKind::decided;
}

Decision decide(Problem p, const Acceptor& a, const Limits& limits) {
    validate_tags(a);
    const CellKind kind = table_cell(p, a);
    switch (kind) {
    case CellKind::undecidable:
        return Decision{p, kind, Verdict::no(std::nullopt, "no decision procedure exists for this class")};
    case CellKind::trivial:
        return Decision{p, kind, trivial_verdict(p, a, limits)};
    case CellKind::decided:
        break;
    }
    return Decision{p, kind, solve(p, a, limits)};
}

} // namespace pangram
