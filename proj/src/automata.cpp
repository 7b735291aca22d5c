#include "pangram/automata.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>

#include "pangram/error.hpp"
#include "pangram/names.hpp"

namespace pangram {

namespace {

std::unordered_map<std::string, State> index_states(const std::vector<std::string>& states,
                                                    std::string_view what) {
    std::unordered_map<std::string, State> index;
    for (State q = 0; q < states.size(); ++q) {
        if (!index.emplace(states[q], q).second) {
            throw InputError(std::string(what) + ".states: duplicate state '" + states[q] + "'");
        }
    }
    return index;
}

State lookup_state(const std::unordered_map<std::string, State>& index, const std::string& name,
                   std::string_view field) {
    auto it = index.find(name);
    if (it == index.end()) {
        throw InputError(std::string(field) + ": unknown state '" + name + "'");
    }
    return it->second;
}

std::string subset_name(const Alphabet& sigma, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (Letter a = 0; a < sigma.size(); ++a) {
        if (mask & (std::uint64_t{1} << a)) {
            if (!first) {
                out += ',';
            }
            out += sigma[a];
            first = false;
        }
    }
    return out + "}";
}

void check_bitmask_cap(const Alphabet& sigma, const Limits& limits, std::string_view what) {
    sigma.require_nonempty(what);
    if (sigma.size() > limits.max_bitmask_alphabet || sigma.size() >= 32) {
        throw SizeLimitError(std::string(what) + ": alphabet of size " + std::to_string(sigma.size()) +
                             " exceeds the bitmask cap of " + std::to_string(limits.max_bitmask_alphabet));
    }
}

// Breadth-first search from `initials`; returns the lex-least shortest word
// reaching an accepting state.
template <typename Successors>
std::optional<Word> shortest_accepted(std::size_t state_count, std::size_t sigma,
                                      const std::vector<State>& initials,
                                      const std::vector<bool>& accepting, Successors&& successors) {
    constexpr State none = static_cast<State>(-1);
    std::vector<State> parent(state_count, none);
    std::vector<Letter> via(state_count, 0);
    std::vector<bool> seen(state_count, false);
    std::deque<State> queue;

    auto trace = [&](State q) {
        Word w;
        while (parent[q] != none) {
            w.push_back(via[q]);
            q = parent[q];
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (State q : initials) {
        if (seen[q]) {
            continue;
        }
        if (accepting[q]) {
            return Word{};
        }
        seen[q] = true;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < sigma; ++a) {
            for (State r : successors(q, a)) {
                if (seen[r]) {
                    continue;
                }
                seen[r] = true;
                parent[r] = q;
                via[r] = a;
                if (accepting[r]) {
                    return trace(r);
                }
                queue.push_back(r);
            }
        }
    }
    return std::nullopt;
}

} // namespace

Dfa::Dfa(Alphabet alphabet, std::vector<std::string> states, State initial,
         std::vector<bool> accepting, std::vector<State> table)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(initial),
      accepting_(std::move(accepting)),
      table_(std::move(table)) {
    alphabet_.require_nonempty("dfa");
    if (states_.empty()) {
        throw InputError("dfa.states: at least one state is required");
    }
    index_states(states_, "dfa");
    if (initial_ >= states_.size()) {
        throw InputError("dfa.initial: state index out of range");
    }
    if (accepting_.size() != states_.size()) {
        throw InputError("dfa.accepting: one flag per state is required");
    }
    if (table_.size() != states_.size() * alphabet_.size()) {
        throw InputError("dfa.transitions: table must be total over states x alphabet");
    }
    for (State r : table_) {
        if (r >= states_.size()) {
            throw InputError("dfa.transitions: target state index out of range");
        }
    }
}

Dfa Dfa::from_named(Alphabet alphabet, std::vector<std::string> states, const std::string& initial,
                    const std::vector<std::string>& accepting,
                    const std::vector<NamedTransition>& transitions) {
    alphabet.require_nonempty("dfa");
    auto index = index_states(states, "dfa");
    const State init = lookup_state(index, initial, "dfa.initial");
    std::vector<bool> acc(states.size(), false);
    for (const auto& name : accepting) {
        acc[lookup_state(index, name, "dfa.accepting")] = true;
    }

    constexpr State missing = static_cast<State>(-1);
    const std::size_t sigma = alphabet.size();
    std::vector<State> table(states.size() * sigma, missing);
    for (const auto& t : transitions) {
        const State from = lookup_state(index, t.from, "dfa.transitions.from");
        const State to = lookup_state(index, t.to, "dfa.transitions.to");
        const Letter a = alphabet.letter(t.symbol, "dfa.transitions.symbol");
        State& slot = table[from * sigma + a];
        if (slot != missing) {
            throw InputError("dfa.transitions: duplicate row for (" + t.from + ", " + t.symbol + ")");
        }
        slot = to;
    }

    if (std::find(table.begin(), table.end(), missing) != table.end()) {
        NameAllocator names(states);
        const State sink = static_cast<State>(states.size());
        states.push_back(names.fresh("sink"));
        acc.push_back(false);
        table.resize(states.size() * sigma, missing);
        for (State& slot : table) {
            if (slot == missing) {
                slot = sink;
            }
        }
    }
    return Dfa(std::move(alphabet), std::move(states), init, std::move(acc), std::move(table));
}

Nfa::Nfa(Alphabet alphabet, std::vector<std::string> states, std::vector<State> initials,
         std::vector<bool> accepting, std::vector<std::vector<State>> table)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initials_(std::move(initials)),
      accepting_(std::move(accepting)),
      table_(std::move(table)) {
    alphabet_.require_nonempty("nfa");
    index_states(states_, "nfa");
    if (accepting_.size() != states_.size()) {
        throw InputError("nfa.accepting: one flag per state is required");
    }
    if (table_.size() != states_.size() * alphabet_.size()) {
        throw InputError("nfa.transitions: table must have one entry per state x symbol");
    }
    auto normalize = [&](std::vector<State>& set, std::string_view field) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (!set.empty() && set.back() >= states_.size()) {
            throw InputError(std::string(field) + ": state index out of range");
        }
    };
    normalize(initials_, "nfa.initials");
    for (auto& set : table_) {
        normalize(set, "nfa.transitions");
    }
}

Nfa Nfa::from_named(Alphabet alphabet, std::vector<std::string> states,
                    const std::vector<std::string>& initials,
                    const std::vector<std::string>& accepting,
                    const std::vector<NamedTransition>& transitions) {
    alphabet.require_nonempty("nfa");
    auto index = index_states(states, "nfa");
    std::vector<State> init;
    for (const auto& name : initials) {
        init.push_back(lookup_state(index, name, "nfa.initials"));
    }
    std::vector<bool> acc(states.size(), false);
    for (const auto& name : accepting) {
        acc[lookup_state(index, name, "nfa.accepting")] = true;
    }
    std::vector<std::vector<State>> table(states.size() * alphabet.size());
    for (const auto& t : transitions) {
        const State from = lookup_state(index, t.from, "nfa.transitions.from");
        const State to = lookup_state(index, t.to, "nfa.transitions.to");
        const Letter a = alphabet.letter(t.symbol, "nfa.transitions.symbol");
        table[from * alphabet.size() + a].push_back(to);
    }
    return Nfa(std::move(alphabet), std::move(states), std::move(init), std::move(acc),
               std::move(table));
}

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), adjacency_(nodes_.size() * nodes_.size()) {
    index_states(nodes_, "graph");
    for (const auto& [u, v] : edges_) {
        if (u >= nodes_.size() || v >= nodes_.size()) {
            throw InputError("graph.edges: endpoint index out of range");
        }
        if (adjacency_[u * nodes_.size() + v]) {
            throw InputError("graph.edges: duplicate edge " + nodes_[u] + " -> " + nodes_[v]);
        }
        adjacency_[u * nodes_.size() + v] = true;
    }
}

Graph Graph::from_names(std::vector<std::string> nodes,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    auto index = index_states(nodes, "graph");
    std::vector<Edge> resolved;
    for (const auto& [u, v] : edges) {
        resolved.emplace_back(lookup_state(index, u, "graph.edges"), lookup_state(index, v, "graph.edges"));
    }
    return Graph(std::move(nodes), std::move(resolved));
}

bool accepts(const Dfa& m, const Word& w) {
    m.alphabet().check(w, "accepts");
    State q = m.initial();
    for (Letter a : w) {
        q = m.next(q, a);
    }
    return m.is_accepting(q);
}

bool accepts(const Nfa& m, const Word& w) {
    m.alphabet().check(w, "accepts");
    std::vector<bool> current(m.state_count(), false);
    for (State q : m.initials()) {
        current[q] = true;
    }
    for (Letter a : w) {
        std::vector<bool> next(m.state_count(), false);
        for (State q = 0; q < m.state_count(); ++q) {
            if (current[q]) {
                for (State r : m.successors(q, a)) {
                    next[r] = true;
                }
            }
        }
        current = std::move(next);
    }
    for (State q = 0; q < m.state_count(); ++q) {
        if (current[q] && m.is_accepting(q)) {
            return true;
        }
    }
    return false;
}

Dfa pangram_dfa(const Alphabet& sigma, const Limits& limits) {
    check_bitmask_cap(sigma, limits, "pangram_dfa");
    const std::size_t n = sigma.size();
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::string> names(count);
    std::vector<bool> accepting(count, false);
    std::vector<State> table(count * n);
    for (std::size_t mask = 0; mask < count; ++mask) {
        names[mask] = subset_name(sigma, mask);
        for (Letter a = 0; a < n; ++a) {
            table[mask * n + a] = static_cast<State>(mask | (std::size_t{1} << a));
        }
    }
    accepting[count - 1] = true;
    return Dfa(sigma, std::move(names), 0, std::move(accepting), std::move(table));
}

Dfa perfect_pangram_dfa(const Alphabet& sigma, const Limits& limits) {
    check_bitmask_cap(sigma, limits, "perfect_pangram_dfa");
    const std::size_t n = sigma.size();
    const std::size_t count = std::size_t{1} << n;
    const State dead = static_cast<State>(count);
    std::vector<std::string> names(count + 1);
    std::vector<bool> accepting(count + 1, false);
    std::vector<State> table((count + 1) * n);
    for (std::size_t mask = 0; mask < count; ++mask) {
        names[mask] = subset_name(sigma, mask);
        for (Letter a = 0; a < n; ++a) {
            const std::size_t bit = std::size_t{1} << a;
            table[mask * n + a] = (mask & bit) ? dead : static_cast<State>(mask | bit);
        }
    }
    NameAllocator taken(names);
    names[dead] = taken.fresh("dead");
    for (Letter a = 0; a < n; ++a) {
        table[dead * n + a] = dead;
    }
    accepting[count - 1] = true;
    return Dfa(sigma, std::move(names), 0, std::move(accepting), std::move(table));
}

Dfa exact_length_dfa(const Alphabet& sigma, std::size_t n) {
    sigma.require_nonempty("exact_length_dfa");
    const std::size_t count = n + 2;
    const State overflow = static_cast<State>(n + 1);
    std::vector<std::string> names(count);
    std::vector<bool> accepting(count, false);
    std::vector<State> table(count * sigma.size());
    for (State q = 0; q < count; ++q) {
        names[q] = q == overflow ? "overflow" : std::to_string(q);
        for (Letter a = 0; a < sigma.size(); ++a) {
            table[q * sigma.size() + a] = q == overflow ? overflow : q + 1;
        }
    }
    accepting[n] = true;
    return Dfa(sigma, std::move(names), 0, std::move(accepting), std::move(table));
}

Dfa not_exact_length_dfa(const Alphabet& sigma, std::size_t n) {
    return complement_dfa(exact_length_dfa(sigma, n));
}

Dfa not_prefixed_dfa(const Word& w, const Alphabet& sigma) {
    sigma.require_nonempty("not_prefixed_dfa");
    if (w.empty()) {
        throw InputError("not_prefixed_dfa: prefix word must be nonempty");
    }
    sigma.check(w, "not_prefixed_dfa");
    const std::size_t len = w.size();
    const State matched = static_cast<State>(len);
    const State diverged = static_cast<State>(len + 1);
    std::vector<std::string> names(len + 2);
    std::vector<bool> accepting(len + 2, true);
    std::vector<State> table((len + 2) * sigma.size());
    for (State q = 0; q < len; ++q) {
        names[q] = "p" + std::to_string(q);
        for (Letter a = 0; a < sigma.size(); ++a) {
            table[q * sigma.size() + a] = a == w[q] ? q + 1 : diverged;
        }
    }
    names[matched] = "matched";
    names[diverged] = "diverged";
    accepting[matched] = false;
    for (Letter a = 0; a < sigma.size(); ++a) {
        table[matched * sigma.size() + a] = matched;
        table[diverged * sigma.size() + a] = diverged;
    }
    return Dfa(sigma, std::move(names), 0, std::move(accepting), std::move(table));
}

Nfa non_pangram_nfa(const Alphabet& sigma) {
    sigma.require_nonempty("non_pangram_nfa");
    const std::size_t n = sigma.size();
    std::vector<std::string> names(n);
    std::vector<State> initials(n);
    std::vector<std::vector<State>> table(n * n);
    for (State q = 0; q < n; ++q) {
        names[q] = "without_" + sigma[q];
        initials[q] = q;
        for (Letter a = 0; a < n; ++a) {
            if (a != q) {
                table[q * n + a] = {q};
            }
        }
    }
    return Nfa(sigma, std::move(names), std::move(initials), std::vector<bool>(n, true),
               std::move(table));
}

Dfa universal_dfa(const Alphabet& sigma) {
    sigma.require_nonempty("universal_dfa");
    return Dfa(sigma, {"all"}, 0, {true}, std::vector<State>(sigma.size(), 0));
}

Dfa empty_dfa(const Alphabet& sigma) {
    sigma.require_nonempty("empty_dfa");
    return Dfa(sigma, {"none"}, 0, {false}, std::vector<State>(sigma.size(), 0));
}

Dfa product_dfa(const Dfa& x, const Dfa& y, ProductMode mode) {
    if (!(x.alphabet() == y.alphabet())) {
        throw InputError("product_dfa: operands have different alphabets");
    }
    const std::size_t sigma = x.alphabet().size();
    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<State> table;
    auto intern = [&](State p, State q) {
        auto [it, fresh] = index.emplace(std::make_pair(p, q), static_cast<State>(pairs.size()));
        if (fresh) {
            pairs.emplace_back(p, q);
        }
        return it->second;
    };
    intern(x.initial(), y.initial());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [p, q] = pairs[i];
        for (Letter a = 0; a < sigma; ++a) {
            table.push_back(intern(x.next(p, a), y.next(q, a)));
        }
    }
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (const auto& [p, q] : pairs) {
        names.push_back("(" + x.state_name(p) + "," + y.state_name(q) + ")");
        const bool in_x = x.is_accepting(p);
        const bool in_y = y.is_accepting(q);
        accepting.push_back(mode == ProductMode::intersection ? (in_x && in_y) : (in_x || in_y));
    }
    return Dfa(x.alphabet(), std::move(names), 0, std::move(accepting), std::move(table));
}

Dfa complement_dfa(const Dfa& x) {
    std::vector<bool> accepting = x.accepting();
    accepting.flip();
    return Dfa(x.alphabet(), x.state_names(), x.initial(), std::move(accepting), x.table());
}

Dfa determinize(const Nfa& n, const Limits& limits) {
    const std::size_t sigma = n.alphabet().size();
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::vector<State> table;
    auto intern = [&](std::vector<State> set) {
        auto [it, fresh] = index.emplace(set, static_cast<State>(subsets.size()));
        if (fresh) {
            if (subsets.size() >= limits.max_subset_states) {
                throw SizeLimitError("determinize: more than " +
                                     std::to_string(limits.max_subset_states) + " reachable subsets");
            }
            subsets.push_back(std::move(set));
        }
        return it->second;
    };
    intern(n.initials());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (Letter a = 0; a < sigma; ++a) {
            std::vector<State> next;
            for (State q : subsets[i]) {
                auto succ = n.successors(q, a);
                next.insert(next.end(), succ.begin(), succ.end());
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            table.push_back(intern(std::move(next)));
        }
    }
    std::vector<std::string> names;
    std::vector<bool> accepting;
    for (const auto& set : subsets) {
        std::string name = "{";
        bool acc = false;
        for (std::size_t i = 0; i < set.size(); ++i) {
            name += (i ? "," : "") + n.state_name(set[i]);
            acc = acc || n.is_accepting(set[i]);
        }
        names.push_back(name + "}");
        accepting.push_back(acc);
    }
    return Dfa(n.alphabet(), std::move(names), 0, std::move(accepting), std::move(table));
}

Nfa to_nfa(const Dfa& x) {
    std::vector<std::vector<State>> table;
    table.reserve(x.table().size());
    for (State r : x.table()) {
        table.push_back({r});
    }
    return Nfa(x.alphabet(), x.state_names(), {x.initial()}, x.accepting(), std::move(table));
}

std::string word_state_name(const Alphabet& sigma, const Word& w) {
    std::string name = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        name += (i ? " " : "") + sigma[w[i]];
    }
    return name + "]";
}

Dfa minimize(const Dfa& x) {
    const std::size_t sigma = x.alphabet().size();

    // Reachable part.
    std::vector<State> reachable{x.initial()};
    std::vector<bool> seen(x.state_count(), false);
    seen[x.initial()] = true;
    for (std::size_t i = 0; i < reachable.size(); ++i) {
        for (Letter a = 0; a < sigma; ++a) {
            State r = x.next(reachable[i], a);
            if (!seen[r]) {
                seen[r] = true;
                reachable.push_back(r);
            }
        }
    }

    // Moore refinement: split classes by (class, successor classes) until stable.
    std::vector<State> block(x.state_count(), 0);
    std::size_t block_count = 0;
    {
        std::map<bool, State> initial_blocks;
        for (State q : reachable) {
            auto [it, fresh] = initial_blocks.emplace(x.is_accepting(q), static_cast<State>(block_count));
            block_count += fresh;
            block[q] = it->second;
        }
    }
    while (true) {
        std::map<std::vector<State>, State> signatures;
        std::vector<State> refined(x.state_count(), 0);
        std::vector<State> signature(sigma + 1);
        for (State q : reachable) {
            signature[0] = block[q];
            for (Letter a = 0; a < sigma; ++a) {
                signature[a + 1] = block[x.next(q, a)];
            }
            auto [it, fresh] = signatures.emplace(signature, static_cast<State>(signatures.size()));
            refined[q] = it->second;
        }
        const bool stable = signatures.size() == block_count;
        block = std::move(refined);
        block_count = signatures.size();
        if (stable) {
            break;
        }
    }

    // Canonical numbering: breadth-first over blocks in alphabet order.
    constexpr State unset = static_cast<State>(-1);
    std::vector<State> representative(block_count, unset);
    for (State q : reachable) {
        if (representative[block[q]] == unset) {
            representative[block[q]] = q;
        }
    }
    std::vector<State> order{block[x.initial()]};
    std::vector<State> number(block_count, unset);
    std::vector<Word> least_word{Word{}};
    number[order[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const State rep = representative[order[i]];
        for (Letter a = 0; a < sigma; ++a) {
            const State b = block[x.next(rep, a)];
            if (number[b] == unset) {
                number[b] = static_cast<State>(order.size());
                order.push_back(b);
                Word w = least_word[i];
                w.push_back(a);
                least_word.push_back(std::move(w));
            }
        }
    }

    std::vector<std::string> names;
    std::vector<bool> accepting;
    std::vector<State> table;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const State rep = representative[order[i]];
        names.push_back(word_state_name(x.alphabet(), least_word[i]));
        accepting.push_back(x.is_accepting(rep));
        for (Letter a = 0; a < sigma; ++a) {
            table.push_back(number[block[x.next(rep, a)]]);
        }
    }
    return Dfa(x.alphabet(), std::move(names), 0, std::move(accepting), std::move(table));
}

bool equivalent(const Dfa& x, const Dfa& y) {
    if (!(x.alphabet() == y.alphabet())) {
        throw InputError("equivalent: operands have different alphabets");
    }
    return minimize(x) == minimize(y);
}

Verdict is_empty(const Dfa& x) {
    auto word = shortest_accepted(x.state_count(), x.alphabet().size(), {x.initial()}, x.accepting(),
                                  [&](State q, Letter a) { return std::array<State, 1>{x.next(q, a)}; });
    return word ? Verdict::no(std::move(word)) : Verdict::yes();
}

Verdict is_empty(const Nfa& x) {
    auto word = shortest_accepted(x.state_count(), x.alphabet().size(), x.initials(), x.accepting(),
                                  [&](State q, Letter a) { return x.successors(q, a); });
    return word ? Verdict::no(std::move(word)) : Verdict::yes();
}

bool is_finite_language(const Dfa& x) {
    const std::size_t n = x.state_count();
    const std::size_t sigma = x.alphabet().size();
    std::vector<bool> reachable(n, false);
    std::vector<State> stack{x.initial()};
    reachable[x.initial()] = true;
    std::vector<std::vector<State>> reverse(n);
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < sigma; ++a) {
            State r = x.next(q, a);
            reverse[r].push_back(q);
            if (!reachable[r]) {
                reachable[r] = true;
                stack.push_back(r);
            }
        }
    }
    std::vector<bool> useful(n, false);
    for (State q = 0; q < n; ++q) {
        if (reachable[q] && x.is_accepting(q)) {
            useful[q] = true;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : reverse[q]) {
            if (!useful[p]) {
                useful[p] = true;
                stack.push_back(p);
            }
        }
    }
    // Kahn's algorithm on the useful subgraph; leftovers mean a cycle.
    std::vector<std::size_t> indegree(n, 0);
    std::size_t useful_count = 0;
    for (State q = 0; q < n; ++q) {
        if (!useful[q]) {
            continue;
        }
        ++useful_count;
        for (Letter a = 0; a < sigma; ++a) {
            State r = x.next(q, a);
            if (useful[r]) {
                ++indegree[r];
            }
        }
    }
    for (State q = 0; q < n; ++q) {
        if (useful[q] && indegree[q] == 0) {
            stack.push_back(q);
        }
    }
    std::size_t removed = 0;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        ++removed;
        for (Letter a = 0; a < sigma; ++a) {
            State r = x.next(q, a);
            if (useful[r] && --indegree[r] == 0) {
                stack.push_back(r);
            }
        }
    }
    return removed == useful_count;
}

} // namespace pangram
