#include "pangram/subregular.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>

#include "pangram/error.hpp"
#include "pangram/scc.hpp"

namespace pangram {

namespace {

void check_words(const Alphabet& sigma, const std::set<Word>& words, std::size_t min_len,
                 std::size_t max_len, std::string_view field) {
    for (const auto& w : words) {
        sigma.check(w, field);
        if (w.size() < min_len || w.size() > max_len) {
            throw InputError(std::string(field) + ": word '" + sigma.render(w) + "' has length " +
                             std::to_string(w.size()) + ", expected " +
                             (min_len == max_len ? std::to_string(min_len)
                                                 : "at most " + std::to_string(max_len)));
        }
    }
}

std::string spaced(const Alphabet& sigma, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? " " : "") + sigma[w[i]];
    }
    return out;
}

} // namespace

SltSpec::SltSpec(std::size_t k, Alphabet alphabet, std::set<Word> prefixes, std::set<Word> infixes,
                 std::set<Word> suffixes)
    : k_(k),
      alphabet_(std::move(alphabet)),
      prefixes_(std::move(prefixes)),
      infixes_(std::move(infixes)),
      suffixes_(std::move(suffixes)) {
    alphabet_.require_nonempty("slt");
    if (k_ < 2) {
        throw InputError("slt.k: must be at least 2");
    }
    check_words(alphabet_, prefixes_, k_ - 1, k_ - 1, "slt.prefixes");
    check_words(alphabet_, infixes_, k_, k_, "slt.infixes");
    check_words(alphabet_, suffixes_, k_ - 1, k_ - 1, "slt.suffixes");
}

SptSpec::SptSpec(std::size_t k, Alphabet alphabet, std::set<Word> forbidden)
    : k_(k), alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
    alphabet_.require_nonempty("spt");
    if (k_ < 1) {
        throw InputError("spt.k: must be at least 1");
    }
    check_words(alphabet_, forbidden_, 0, k_, "spt.forbidden");
}

std::size_t SptSpec::symbol_count() const {
    std::size_t total = 0;
    for (const auto& f : forbidden_) {
        total += f.size();
    }
    return total;
}

bool slt_member(const SltSpec& s, const Word& w) {
    s.alphabet().check(w, "slt_member");
    const std::size_t k = s.k();
    if (w.size() < k - 1) {
        return false;
    }
    if (!s.prefixes().contains(Word(w.begin(), w.begin() + (k - 1)))) {
        return false;
    }
    if (!s.suffixes().contains(Word(w.end() - (k - 1), w.end()))) {
        return false;
    }
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
        if (!s.infixes().contains(Word(w.begin() + i, w.begin() + i + k))) {
            return false;
        }
    }
    return true;
}

bool spt_member(const SptSpec& s, const Word& w) {
    s.alphabet().check(w, "spt_member");
    return std::none_of(s.forbidden().begin(), s.forbidden().end(),
                        [&](const Word& f) { return is_subsequence(f, w); });
}

Dfa slt_to_dfa(const SltSpec& s) {
    const Alphabet& sigma = s.alphabet();
    const std::size_t window = s.k() - 1;
    std::set<Word> partial_prefixes;
    for (const auto& p : s.prefixes()) {
        for (std::size_t len = 0; len < window; ++len) {
            partial_prefixes.insert(Word(p.begin(), p.begin() + len));
        }
    }
    // Key: (is window state, word). Prefix states hold fewer than k-1 letters.
    using Key = std::pair<bool, Word>;
    std::map<Key, State> index;
    std::vector<Key> keys;
    constexpr State sink = 0;
    keys.push_back({false, Word{~Letter{0}}});
    auto intern = [&](Key key) {
        auto [it, fresh] = index.emplace(key, static_cast<State>(keys.size()));
        if (fresh) {
            keys.push_back(std::move(key));
        }
        return it->second;
    };
    auto step = [&](const Key& key, Letter a) -> State {
        Word w = key.second;
        w.push_back(a);
        if (!key.first) {
            if (w.size() < window) {
                return partial_prefixes.contains(w) ? intern({false, w}) : sink;
            }
            return s.prefixes().contains(w) ? intern({true, w}) : sink;
        }
        if (!s.infixes().contains(w)) {
            return sink;
        }
        return intern({true, Word(w.begin() + 1, w.end())});
    };
    // The initial state is the empty prefix; a prefix-less spec still needs it.
    const State initial = intern({false, Word{}});
    std::vector<State> table(sigma.size(), sink);
    for (std::size_t i = 1; i < keys.size(); ++i) {
        for (Letter a = 0; a < sigma.size(); ++a) {
            const Key key = keys[i];
            table.push_back(step(key, a));
        }
    }
    std::vector<std::string> names{"sink"};
    std::vector<bool> accepting{false};
    for (std::size_t i = 1; i < keys.size(); ++i) {
        const auto& [is_window, w] = keys[i];
        names.push_back((is_window ? "window[" : "prefix[") + spaced(sigma, w) + "]");
        accepting.push_back(is_window && s.suffixes().contains(w));
    }
    return Dfa(sigma, std::move(names), initial, std::move(accepting), std::move(table));
}

Dfa spt_to_dfa(const SptSpec& s, const Limits& limits) {
    const Alphabet& sigma = s.alphabet();
    const std::vector<Word> forbidden(s.forbidden().begin(), s.forbidden().end());
    using Progress = std::vector<std::uint32_t>;
    std::map<Progress, State> index;
    std::vector<Progress> states;
    constexpr State dead = 0;
    states.push_back({});
    auto intern = [&](Progress p) -> State {
        for (std::size_t i = 0; i < forbidden.size(); ++i) {
            if (p[i] == forbidden[i].size()) {
                return dead;
            }
        }
        auto [it, fresh] = index.emplace(p, static_cast<State>(states.size()));
        if (fresh) {
            if (states.size() > limits.max_subset_states) {
                throw SizeLimitError("spt_to_dfa: more than " + std::to_string(limits.max_subset_states) +
                                     " progress states");
            }
            states.push_back(std::move(p));
        }
        return it->second;
    };
    const State initial = intern(Progress(forbidden.size(), 0));
    std::vector<State> table(sigma.size(), dead);
    for (std::size_t i = 1; i < states.size(); ++i) {
        for (Letter a = 0; a < sigma.size(); ++a) {
            Progress next = states[i];
            for (std::size_t f = 0; f < forbidden.size(); ++f) {
                if (forbidden[f][next[f]] == a) {
                    ++next[f];
                }
            }
            table.push_back(intern(std::move(next)));
        }
    }
    std::vector<std::string> names{"dead"};
    std::vector<bool> accepting{false};
    for (std::size_t i = 1; i < states.size(); ++i) {
        std::string name = "progress(";
        for (std::size_t f = 0; f < states[i].size(); ++f) {
            name += (f ? "," : "") + std::to_string(states[i][f]);
        }
        names.push_back(name + ")");
        accepting.push_back(true);
    }
    return Dfa(sigma, std::move(names), initial, std::move(accepting), std::move(table));
}

Verdict slt2_contains_pangram(const SltSpec& s) {
    if (s.k() != 2) {
        throw InputError("slt2_contains_pangram: requires k = 2, got k = " + std::to_string(s.k()));
    }
    const std::size_t n = s.alphabet().size();
    std::vector<std::vector<std::size_t>> successors(n);
    for (const auto& edge : s.infixes()) {
        successors[edge[0]].push_back(edge[1]);
    }
    const SccDecomposition scc = strongly_connected_components(successors);
    const std::size_t count = scc.components.size();

    // The condensation must be a chain: consecutive components linked by an edge.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::size_t>> link(count, {none, none});
    for (const auto& edge : s.infixes()) {
        const std::size_t c = scc.component_of[edge[0]];
        if (scc.component_of[edge[1]] == c + 1 && link[c].first == none) {
            link[c] = {edge[0], edge[1]};
        }
    }
    for (std::size_t c = 0; c + 1 < count; ++c) {
        if (link[c].first == none) {
            return Verdict::no();
        }
    }
    auto first_in = [&](const std::set<Word>& words, std::size_t component) -> std::size_t {
        for (const auto& w : words) {
            if (scc.component_of[w[0]] == component) {
                return w[0];
            }
        }
        return none;
    };
    const std::size_t begin = first_in(s.prefixes(), 0);
    const std::size_t end = first_in(s.suffixes(), count - 1);
    if (begin == none || end == none) {
        return Verdict::no();
    }

    // Witness: cover each component from its entry to its exit, then cross the link.
    Word walk;
    std::vector<std::size_t> parent(n);
    auto path_within = [&](std::size_t from, std::size_t to, std::size_t component) {
        std::fill(parent.begin(), parent.end(), none);
        std::deque<std::size_t> queue{from};
        parent[from] = from;
        while (!queue.empty() && parent[to] == none) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : successors[v]) {
                if (parent[w] == none && scc.component_of[w] == component) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        std::vector<std::size_t> path;
        for (std::size_t v = to; v != from; v = parent[v]) {
            path.push_back(v);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    std::vector<bool> visited(n, false);
    std::size_t entry = begin;
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t exit = c + 1 < count ? link[c].first : end;
        std::size_t current = entry;
        walk.push_back(static_cast<Letter>(current));
        visited[current] = true;
        auto go = [&](std::size_t target) {
            for (std::size_t v : path_within(current, target, c)) {
                walk.push_back(static_cast<Letter>(v));
                visited[v] = true;
            }
            current = target;
        };
        for (std::size_t v : scc.components[c]) {
            if (!visited[v]) {
                go(v);
            }
        }
        if (current != exit) {
            go(exit);
        }
        if (c + 1 < count) {
            entry = link[c].second;
        }
    }
    return Verdict::yes(std::move(walk));
}

Verdict spt2_contains_pangram(const SptSpec& s) {
    for (const auto& f : s.forbidden()) {
        if (f.size() > 2) {
            throw InputError("spt2_contains_pangram: forbidden word of length " + std::to_string(f.size()) +
                             " needs the generic decider");
        }
    }
    for (const auto& f : s.forbidden()) {
        if (f.size() < 2) {
            return Verdict::no();
        }
    }
    // Edge x -> y for forbidden "xy": x must come after y, so y precedes x in the
    // topological order of the reversed witness.
    const std::size_t n = s.alphabet().size();
    std::vector<std::vector<std::size_t>> successors(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& f : s.forbidden()) {
        if (f[0] != f[1]) {
            successors[f[0]].push_back(f[1]);
            ++indegree[f[1]];
        }
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push(v);
        }
    }
    Word order;
    while (!ready.empty()) {
        const std::size_t v = ready.top();
        ready.pop();
        order.push_back(static_cast<Letter>(v));
        for (std::size_t w : successors[v]) {
            if (--indegree[w] == 0) {
                ready.push(w);
            }
        }
    }
    if (order.size() != n) {
        return Verdict::no();
    }
    std::reverse(order.begin(), order.end());
    return Verdict::yes(std::move(order));
}

} // namespace pangram
