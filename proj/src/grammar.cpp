#include "pangram/grammar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>

#include "pangram/error.hpp"
#include "pangram/names.hpp"

namespace pangram {

namespace {

constexpr std::uint32_t no_rule = static_cast<std::uint32_t>(-1);

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t top = ShortestDerivations::unreachable - 1;
    return (a > top - std::min(b, top)) ? top : a + b;
}

std::vector<std::string> all_names(const Cfg& g) {
    std::vector<std::string> names = g.terminals().symbols();
    names.insert(names.end(), g.nonterminals().begin(), g.nonterminals().end());
    return names;
}

} // namespace

Cfg::Cfg(Alphabet terminals, std::vector<std::string> nonterminals, std::uint32_t start,
         std::vector<Rule> rules)
    : terminals_(std::move(terminals)),
      nonterminals_(std::move(nonterminals)),
      start_(start),
      rules_(std::move(rules)) {
    terminals_.require_nonempty("cfg.terminals");
    std::set<std::string> seen;
    for (const auto& name : nonterminals_) {
        if (name.empty()) {
            throw InputError("cfg.nonterminals: names must be nonempty");
        }
        if (terminals_.contains(name)) {
            throw InputError("cfg.nonterminals: '" + name + "' is also a terminal");
        }
        if (!seen.insert(name).second) {
            throw InputError("cfg.nonterminals: duplicate nonterminal '" + name + "'");
        }
    }
    if (start_ >= nonterminals_.size()) {
        throw InputError("cfg.start: not a declared nonterminal");
    }
    for (const auto& r : rules_) {
        if (r.lhs >= nonterminals_.size()) {
            throw InputError("cfg.rules.lhs: nonterminal index out of range");
        }
        for (const auto& s : r.rhs) {
            const std::size_t bound = s.is_terminal() ? terminals_.size() : nonterminals_.size();
            if (s.index >= bound) {
                throw InputError("cfg.rules.rhs: symbol index out of range");
            }
        }
    }
}

Cfg Cfg::from_names(Alphabet terminals, std::vector<std::string> nonterminals,
                    const std::string& start, const std::vector<NamedRule>& rules) {
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < nonterminals.size(); ++i) {
        index.emplace(nonterminals[i], i);
    }
    auto nonterminal = [&](const std::string& name, std::string_view field) {
        auto it = index.find(name);
        if (it == index.end()) {
            throw InputError(std::string(field) + ": '" + name + "' is not a declared nonterminal");
        }
        return it->second;
    };
    const std::uint32_t s = nonterminal(start, "cfg.start");
    std::vector<Rule> resolved;
    for (const auto& r : rules) {
        Rule rule{nonterminal(r.lhs, "cfg.rules.lhs"), {}};
        for (const auto& name : r.rhs) {
            if (auto t = terminals.find(name)) {
                rule.rhs.push_back(GrammarSymbol::terminal(*t));
            } else if (auto it = index.find(name); it != index.end()) {
                rule.rhs.push_back(GrammarSymbol::nonterminal(it->second));
            } else {
                throw InputError("cfg.rules.rhs: unknown symbol '" + name + "'");
            }
        }
        resolved.push_back(std::move(rule));
    }
    return Cfg(std::move(terminals), std::move(nonterminals), s, std::move(resolved));
}

std::size_t Cfg::size() const {
    std::size_t total = 0;
    for (const auto& r : rules_) {
        total += 1 + r.rhs.size();
    }
    return total;
}

std::string Cfg::symbol_name(const GrammarSymbol& s) const {
    return s.is_terminal() ? terminals_[s.index] : nonterminals_.at(s.index);
}

std::vector<NamedRule> Cfg::named_rules() const {
    std::vector<NamedRule> out;
    for (const auto& r : rules_) {
        NamedRule named{nonterminals_[r.lhs], {}};
        for (const auto& s : r.rhs) {
            named.rhs.push_back(symbol_name(s));
        }
        out.push_back(std::move(named));
    }
    return out;
}

ShortestDerivations::ShortestDerivations(const Cfg& g, const std::vector<bool>* enabled_rules)
    : g_(g), length_(g.nonterminal_count(), unreachable), rule_(g.nonterminal_count(), no_rule) {
    const auto& rules = g.rules();
    const std::size_t n = g.nonterminal_count();
    auto enabled = [&](std::size_t r) { return !enabled_rules || (*enabled_rules)[r]; };

    std::vector<std::uint32_t> pending(rules.size(), 0);
    std::vector<std::uint64_t> partial(rules.size(), 0);
    std::vector<std::vector<std::uint32_t>> occurrences(n);
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        if (!enabled(r)) {
            continue;
        }
        for (const auto& s : rules[r].rhs) {
            if (s.is_terminal()) {
                ++partial[r];
            } else {
                ++pending[r];
                occurrences[s.index].push_back(r);
            }
        }
    }

    std::vector<std::uint64_t> best(n, unreachable);
    std::vector<std::uint32_t> best_rule(n, no_rule);
    std::vector<bool> done(n, false);
    using Entry = std::pair<std::uint64_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    auto offer = [&](std::uint32_t r) {
        const std::uint32_t a = rules[r].lhs;
        if (done[a]) {
            return;
        }
        if (partial[r] < best[a] || (partial[r] == best[a] && r < best_rule[a])) {
            best[a] = partial[r];
            best_rule[a] = r;
            queue.emplace(partial[r], a);
        }
    };
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        if (enabled(r) && pending[r] == 0) {
            offer(r);
        }
    }
    while (!queue.empty()) {
        auto [len, a] = queue.top();
        queue.pop();
        if (done[a] || len != best[a]) {
            continue;
        }
        done[a] = true;
        length_[a] = len;
        rule_[a] = best_rule[a];
        for (std::uint32_t r : occurrences[a]) {
            partial[r] = saturating_add(partial[r], len);
            if (--pending[r] == 0) {
                offer(r);
            }
        }
    }
}

std::optional<Word> ShortestDerivations::expand(const std::vector<GrammarSymbol>& form,
                                                std::size_t max_length) const {
    std::uint64_t total = 0;
    for (const auto& s : form) {
        if (s.is_terminal()) {
            total = saturating_add(total, 1);
        } else if (!generating(s.index)) {
            return std::nullopt;
        } else {
            total = saturating_add(total, length_[s.index]);
        }
    }
    if (total > max_length) {
        return std::nullopt;
    }
    Word out;
    out.reserve(total);
    std::vector<GrammarSymbol> stack(form.rbegin(), form.rend());
    while (!stack.empty()) {
        GrammarSymbol s = stack.back();
        stack.pop_back();
        if (s.is_terminal()) {
            out.push_back(s.index);
        } else {
            const auto& rhs = g_.rules()[rule_[s.index]].rhs;
            stack.insert(stack.end(), rhs.rbegin(), rhs.rend());
        }
    }
    return out;
}

std::optional<Word> ShortestDerivations::expand(std::uint32_t n, std::size_t max_length) const {
    return expand(std::vector<GrammarSymbol>{GrammarSymbol::nonterminal(n)}, max_length);
}

Cfg trim(const Cfg& g) {
    ShortestDerivations sd(g);
    const auto& rules = g.rules();
    auto rhs_generating = [&](const Rule& r) {
        return std::all_of(r.rhs.begin(), r.rhs.end(),
                           [&](const GrammarSymbol& s) { return s.is_terminal() || sd.generating(s.index); });
    };
    std::vector<std::vector<std::uint32_t>> by_lhs(g.nonterminal_count());
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        if (rhs_generating(rules[r])) {
            by_lhs[rules[r].lhs].push_back(r);
        }
    }
    std::vector<bool> reachable(g.nonterminal_count(), false);
    std::vector<std::uint32_t> stack{g.start()};
    reachable[g.start()] = true;
    while (!stack.empty()) {
        std::uint32_t a = stack.back();
        stack.pop_back();
        for (std::uint32_t r : by_lhs[a]) {
            for (const auto& s : rules[r].rhs) {
                if (!s.is_terminal() && !reachable[s.index]) {
                    reachable[s.index] = true;
                    stack.push_back(s.index);
                }
            }
        }
    }

    constexpr std::uint32_t dropped = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> renumber(g.nonterminal_count(), dropped);
    std::vector<std::string> names;
    for (std::uint32_t a = 0; a < g.nonterminal_count(); ++a) {
        if (a == g.start() || (reachable[a] && sd.generating(a))) {
            renumber[a] = static_cast<std::uint32_t>(names.size());
            names.push_back(g.nonterminals()[a]);
        }
    }
    std::vector<Rule> kept;
    for (const auto& r : rules) {
        if (!reachable[r.lhs] || !rhs_generating(r)) {
            continue;
        }
        Rule copy{renumber[r.lhs], r.rhs};
        for (auto& s : copy.rhs) {
            if (!s.is_terminal()) {
                s.index = renumber[s.index];
            }
        }
        kept.push_back(std::move(copy));
    }
    return Cfg(g.terminals(), std::move(names), renumber[g.start()], std::move(kept));
}

CnfGrammar to_cnf(const Cfg& input) {
    const Cfg g = trim(input);
    NameAllocator names(all_names(g));
    std::vector<std::string> nts = g.nonterminals();
    auto add_nonterminal = [&](const std::string& base) {
        nts.push_back(names.fresh(base));
        return static_cast<std::uint32_t>(nts.size() - 1);
    };

    // TERM: terminals inside long right-hand sides get a proxy nonterminal.
    std::vector<Rule> rules;
    std::map<Letter, std::uint32_t> proxy;
    std::vector<Rule> proxy_rules;
    for (const auto& r : g.rules()) {
        Rule copy = r;
        if (copy.rhs.size() >= 2) {
            for (auto& s : copy.rhs) {
                if (!s.is_terminal()) {
                    continue;
                }
                auto it = proxy.find(s.index);
                if (it == proxy.end()) {
                    const std::uint32_t t = add_nonterminal("T_" + g.terminals()[s.index]);
                    it = proxy.emplace(s.index, t).first;
                    proxy_rules.push_back(Rule{t, {s}});
                }
                s = GrammarSymbol::nonterminal(it->second);
            }
        }
        rules.push_back(std::move(copy));
    }
    rules.insert(rules.end(), proxy_rules.begin(), proxy_rules.end());

    // BIN: right-hand sides longer than two become chains.
    std::vector<Rule> binarized;
    for (auto& r : rules) {
        if (r.rhs.size() <= 2) {
            binarized.push_back(std::move(r));
            continue;
        }
        std::uint32_t lhs = r.lhs;
        const std::string base = nts[r.lhs] + "_bin";
        for (std::size_t i = 0; i + 2 < r.rhs.size(); ++i) {
            const std::uint32_t rest = add_nonterminal(base);
            binarized.push_back(Rule{lhs, {r.rhs[i], GrammarSymbol::nonterminal(rest)}});
            lhs = rest;
        }
        binarized.push_back(Rule{lhs, {r.rhs[r.rhs.size() - 2], r.rhs.back()}});
    }

    // DEL: nullable nonterminals; drop epsilon rules, add the shortened variants.
    std::vector<bool> nullable(nts.size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : binarized) {
            if (nullable[r.lhs]) {
                continue;
            }
            const bool all_nullable = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const GrammarSymbol& s) {
                return !s.is_terminal() && nullable[s.index];
            });
            if (all_nullable) {
                nullable[r.lhs] = true;
                changed = true;
            }
        }
    }
    std::vector<Rule> no_empty;
    std::set<Rule> seen;
    auto emit = [&](Rule r, std::vector<Rule>& out) {
        if (seen.insert(r).second) {
            out.push_back(std::move(r));
        }
    };
    for (const auto& r : binarized) {
        if (r.rhs.empty()) {
            continue;
        }
        emit(r, no_empty);
        if (r.rhs.size() == 2) {
            const auto& x = r.rhs[0];
            const auto& y = r.rhs[1];
            if (!x.is_terminal() && nullable[x.index]) {
                emit(Rule{r.lhs, {y}}, no_empty);
            }
            if (!y.is_terminal() && nullable[y.index]) {
                emit(Rule{r.lhs, {x}}, no_empty);
            }
        }
    }

    // UNIT: A -> B chains are closed and replaced by B's non-unit rules.
    auto is_unit = [](const Rule& r) { return r.rhs.size() == 1 && !r.rhs[0].is_terminal(); };
    std::vector<std::vector<std::uint32_t>> unit_targets(nts.size());
    std::vector<std::vector<const Rule*>> proper(nts.size());
    for (const auto& r : no_empty) {
        if (is_unit(r)) {
            unit_targets[r.lhs].push_back(r.rhs[0].index);
        } else {
            proper[r.lhs].push_back(&r);
        }
    }
    seen.clear();
    std::vector<Rule> cnf_rules;
    for (std::uint32_t a = 0; a < nts.size(); ++a) {
        std::vector<std::uint32_t> closure{a};
        std::vector<bool> in_closure(nts.size(), false);
        in_closure[a] = true;
        for (std::size_t i = 0; i < closure.size(); ++i) {
            for (std::uint32_t b : unit_targets[closure[i]]) {
                if (!in_closure[b]) {
                    in_closure[b] = true;
                    closure.push_back(b);
                }
            }
        }
        for (std::uint32_t b : closure) {
            for (const Rule* r : proper[b]) {
                emit(Rule{a, r->rhs}, cnf_rules);
            }
        }
    }

    const bool derives_empty = nullable[g.start()];
    return CnfGrammar{trim(Cfg(g.terminals(), std::move(nts), g.start(), std::move(cnf_rules))),
                      derives_empty};
}

CykParser::CykParser(const Cfg& g) : cnf_(to_cnf(g)) {
    by_terminal_.resize(cnf_.grammar.terminals().size());
    for (const auto& r : cnf_.grammar.rules()) {
        if (r.rhs.size() == 1) {
            by_terminal_[r.rhs[0].index].push_back(r.lhs);
        } else {
            binary_.push_back(Binary{r.lhs, r.rhs[0].index, r.rhs[1].index});
        }
    }
}

bool CykParser::accepts(const Word& w) const {
    cnf_.grammar.terminals().check(w, "cyk_member");
    const std::size_t n = w.size();
    if (n == 0) {
        return cnf_.derives_empty;
    }
    const std::size_t nts = cnf_.grammar.nonterminal_count();
    // cell(i, len) holds the nonterminals deriving w[i, i + len).
    std::vector<std::vector<bool>> table(n * (n + 1), std::vector<bool>(nts, false));
    auto cell = [&](std::size_t i, std::size_t len) -> std::vector<bool>& { return table[i * (n + 1) + len]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t a : by_terminal_[w[i]]) {
            cell(i, 1)[a] = true;
        }
    }
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            auto& target = cell(i, len);
            for (std::size_t split = 1; split < len; ++split) {
                const auto& left = cell(i, split);
                const auto& right = cell(i + split, len - split);
                for (const auto& b : binary_) {
                    if (!target[b.lhs] && left[b.left] && right[b.right]) {
                        target[b.lhs] = true;
                    }
                }
            }
        }
    }
    return cell(0, n)[cnf_.grammar.start()];
}

bool cyk_member(const Cfg& g, const Word& w) {
    return CykParser(g).accepts(w);
}

Verdict is_empty_cfg(const Cfg& g, const Limits& limits) {
    ShortestDerivations sd(g);
    if (!sd.generating(g.start())) {
        return Verdict::yes();
    }
    auto witness = sd.expand(g.start(), limits.max_witness_length);
    return Verdict::no(witness, witness ? "" : "shortest member exceeds the witness length cap");
}

Cfg downward_closure(const Cfg& g) {
    CnfGrammar cnf = to_cnf(g);
    std::vector<Rule> rules = cnf.grammar.rules();
    if (!rules.empty()) {
        for (std::uint32_t a = 0; a < cnf.grammar.nonterminal_count(); ++a) {
            rules.push_back(Rule{a, {}});
        }
    } else if (cnf.derives_empty) {
        rules.push_back(Rule{cnf.grammar.start(), {}});
    }
    return Cfg(cnf.grammar.terminals(), cnf.grammar.nonterminals(), cnf.grammar.start(),
               std::move(rules));
}

Verdict subset_of_pangrams(const Cfg& g, const Limits& limits) {
    const auto& rules = g.rules();
    const std::size_t sigma = g.terminals().size();
    std::vector<std::vector<std::uint32_t>> mentioning(sigma);
    std::vector<std::uint32_t> last_rule(sigma, no_rule);
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        for (const auto& s : rules[r].rhs) {
            if (s.is_terminal() && last_rule[s.index] != r) {
                last_rule[s.index] = r;
                mentioning[s.index].push_back(r);
            }
        }
    }
    std::vector<bool> enabled(rules.size(), true);
    for (Letter a = 0; a < sigma; ++a) {
        for (std::uint32_t r : mentioning[a]) {
            enabled[r] = false;
        }
        ShortestDerivations sd(g, &enabled);
        if (sd.generating(g.start())) {
            auto witness = sd.expand(g.start(), limits.max_witness_length);
            return Verdict::no(witness, witness ? "" : "counterexample exceeds the witness length cap");
        }
        for (std::uint32_t r : mentioning[a]) {
            enabled[r] = true;
        }
    }
    return Verdict::yes();
}

namespace {

// Left and right parts of a shortest sentential form S =>* left N right.
std::pair<std::vector<GrammarSymbol>, std::vector<GrammarSymbol>> shortest_context(
    const Cfg& g, const ShortestDerivations& sd, std::uint32_t target) {
    const auto& rules = g.rules();
    const std::size_t n = g.nonterminal_count();
    std::vector<std::vector<std::uint32_t>> by_lhs(n);
    for (std::uint32_t r = 0; r < rules.size(); ++r) {
        by_lhs[rules[r].lhs].push_back(r);
    }
    constexpr std::uint64_t inf = ShortestDerivations::unreachable;
    std::vector<std::uint64_t> dist(n, inf);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parent(n, {no_rule, 0});
    std::vector<bool> done(n, false);
    using Entry = std::pair<std::uint64_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[g.start()] = 0;
    queue.emplace(0, g.start());
    while (!queue.empty()) {
        auto [d, a] = queue.top();
        queue.pop();
        if (done[a]) {
            continue;
        }
        done[a] = true;
        if (a == target) {
            break;
        }
        for (std::uint32_t r : by_lhs[a]) {
            const auto& rhs = rules[r].rhs;
            std::uint64_t total = d;
            for (const auto& s : rhs) {
                total = saturating_add(total, s.is_terminal() ? 1 : sd.length(s.index));
            }
            for (std::uint32_t i = 0; i < rhs.size(); ++i) {
                if (rhs[i].is_terminal()) {
                    continue;
                }
                const std::uint32_t b = rhs[i].index;
                const std::uint64_t candidate = total - sd.length(b);
                if (!done[b] && candidate < dist[b]) {
                    dist[b] = candidate;
                    parent[b] = {r, i};
                    queue.emplace(candidate, b);
                }
            }
        }
    }
    std::vector<GrammarSymbol> left, right;
    for (std::uint32_t a = target; a != g.start();) {
        const auto [r, i] = parent[a];
        const auto& rhs = rules[r].rhs;
        left.insert(left.begin(), rhs.begin(), rhs.begin() + i);
        right.insert(right.end(), rhs.begin() + i + 1, rhs.end());
        a = rules[r].lhs;
    }
    return {std::move(left), std::move(right)};
}

} // namespace

Verdict subset_of_perfect_pangrams(const Cfg& input, const Limits& limits) {
    const Cfg g = trim(input);
    ShortestDerivations sd(g);
    if (!sd.generating(g.start())) {
        return Verdict::yes();
    }
    Verdict pangrams = subset_of_pangrams(g, limits);
    if (!pangrams.answer) {
        return pangrams;
    }
    const std::size_t sigma = g.terminals().size();
    for (const auto& r : g.rules()) {
        std::uint64_t via_rule = 0;
        for (const auto& s : r.rhs) {
            via_rule = saturating_add(via_rule, s.is_terminal() ? 1 : sd.length(s.index));
        }
        if (via_rule == sd.length(r.lhs)) {
            continue;
        }
        // r gives lhs a second length, so one of the two completions misses |Sigma|.
        auto [left, right] = shortest_context(g, sd, r.lhs);
        auto complete = [&](const std::vector<GrammarSymbol>& middle) {
            std::vector<GrammarSymbol> form = left;
            form.insert(form.end(), middle.begin(), middle.end());
            form.insert(form.end(), right.begin(), right.end());
            return sd.expand(form, limits.max_witness_length);
        };
        auto witness = complete(r.rhs);
        if (!witness || witness->size() == sigma) {
            witness = complete({GrammarSymbol::nonterminal(r.lhs)});
        }
        return Verdict::no(witness, witness ? "" : "counterexample exceeds the witness length cap");
    }
    if (sd.length(g.start()) != sigma) {
        auto witness = sd.expand(g.start(), limits.max_witness_length);
        return Verdict::no(witness, witness ? "" : "counterexample exceeds the witness length cap");
    }
    return Verdict::yes();
}

namespace {

Cfg automaton_to_cfg(const Alphabet& sigma, const std::vector<std::string>& states,
                     const std::vector<State>& initials, const std::vector<bool>& accepting,
                     const std::function<std::vector<State>(State, Letter)>& successors) {
    NameAllocator names(sigma.symbols());
    std::vector<std::string> nts;
    for (const auto& q : states) {
        nts.push_back(names.fresh(q));
    }
    std::vector<Rule> rules;
    std::uint32_t start = initials.empty() ? 0 : initials.front();
    if (initials.size() != 1) {
        start = static_cast<std::uint32_t>(nts.size());
        nts.push_back(names.fresh("start"));
        for (State q : initials) {
            rules.push_back(Rule{start, {GrammarSymbol::nonterminal(q)}});
        }
    }
    for (State q = 0; q < states.size(); ++q) {
        for (Letter a = 0; a < sigma.size(); ++a) {
            for (State r : successors(q, a)) {
                rules.push_back(Rule{q, {GrammarSymbol::terminal(a), GrammarSymbol::nonterminal(r)}});
            }
        }
        if (accepting[q]) {
            rules.push_back(Rule{q, {}});
        }
    }
    return Cfg(sigma, std::move(nts), start, std::move(rules));
}

} // namespace

Cfg dfa_to_cfg(const Dfa& x) {
    return automaton_to_cfg(x.alphabet(), x.state_names(), {x.initial()}, x.accepting(),
                            [&](State q, Letter a) { return std::vector<State>{x.next(q, a)}; });
}

Cfg dfa_to_cfg(const Nfa& x) {
    return automaton_to_cfg(x.alphabet(), x.state_names(), x.initials(), x.accepting(), [&](State q, Letter a) {
        auto succ = x.successors(q, a);
        return std::vector<State>(succ.begin(), succ.end());
    });
}

Cfg concat_word_cfg(const Word& w, const Cfg& g) {
    g.terminals().check(w, "concat_word_cfg");
    NameAllocator names(all_names(g));
    std::vector<std::string> nts = g.nonterminals();
    const auto start = static_cast<std::uint32_t>(nts.size());
    nts.push_back(names.fresh(g.nonterminals()[g.start()] + "_prefixed"));
    std::vector<Rule> rules = g.rules();
    Rule head{start, {}};
    for (Letter a : w) {
        head.rhs.push_back(GrammarSymbol::terminal(a));
    }
    head.rhs.push_back(GrammarSymbol::nonterminal(g.start()));
    rules.insert(rules.begin(), std::move(head));
    return Cfg(g.terminals(), std::move(nts), start, std::move(rules));
}

Cfg union_cfg(const Cfg& g, const Cfg& h) {
    if (!(g.terminals() == h.terminals())) {
        throw InputError("union_cfg: operands have different terminal alphabets");
    }
    NameAllocator names(all_names(g));
    std::vector<std::string> nts = g.nonterminals();
    const auto offset = static_cast<std::uint32_t>(nts.size());
    for (const auto& name : h.nonterminals()) {
        nts.push_back(names.fresh(name));
    }
    const auto start = static_cast<std::uint32_t>(nts.size());
    nts.push_back(names.fresh("union"));
    std::vector<Rule> rules{Rule{start, {GrammarSymbol::nonterminal(g.start())}},
                            Rule{start, {GrammarSymbol::nonterminal(h.start() + offset)}}};
    rules.insert(rules.end(), g.rules().begin(), g.rules().end());
    for (Rule r : h.rules()) {
        r.lhs += offset;
        for (auto& s : r.rhs) {
            if (!s.is_terminal()) {
                s.index += offset;
            }
        }
        rules.push_back(std::move(r));
    }
    return Cfg(g.terminals(), std::move(nts), start, std::move(rules));
}

} // namespace pangram

namespace pangram {

std::optional<Word> member_with_subsequence(const Cfg& g, const Word& u, const Limits& limits) {
    g.terminals().check(u, "member_with_subsequence");
    const CnfGrammar cnf = to_cnf(g);
    const Cfg& h = cnf.grammar;
    if (u.empty()) {
        if (cnf.derives_empty) {
            return Word{};
        }
        return ShortestDerivations(h).expand(h.start(), limits.max_witness_length);
    }
    if (h.rules().empty()) {
        return std::nullopt;
    }
    // Every nonterminal of a trimmed, nonempty CNF grammar is generating, so each
    // can cover the empty span by its shortest word.
    const ShortestDerivations shortest(h);
    const std::size_t n = u.size();
    const std::size_t nts = h.nonterminal_count();
    struct Choice {
        std::uint32_t rule = no_rule;
        std::uint32_t split = 0;
    };
    // choice[(i * (n + 1) + j) * nts + A] for 0 <= i < j <= n.
    std::vector<Choice> choice((n + 1) * (n + 1) * nts);
    auto at = [&](std::size_t i, std::size_t j, std::uint32_t a) -> Choice& {
        return choice[(i * (n + 1) + j) * nts + a];
    };
    auto covers = [&](std::size_t i, std::size_t j, std::uint32_t a) {
        return i == j || at(i, j, a).rule != no_rule;
    };
    const auto& rules = h.rules();
    StepCounter steps(limits, "member_with_subsequence");
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t j = i + len;
            // Same-span dependencies (a child covering nothing) need a fixpoint.
            for (bool changed = true; changed;) {
                changed = false;
                steps.tick(rules.size());
                for (std::uint32_t r = 0; r < rules.size(); ++r) {
                    const Rule& rule = rules[r];
                    if (at(i, j, rule.lhs).rule != no_rule) {
                        continue;
                    }
                    if (rule.rhs.size() == 1) {
                        if (len == 1 && rule.rhs[0].index == u[i]) {
                            at(i, j, rule.lhs) = Choice{r, 0};
                            changed = true;
                        }
                        continue;
                    }
                    const std::uint32_t left = rule.rhs[0].index;
                    const std::uint32_t right = rule.rhs[1].index;
                    for (std::size_t m = i; m <= j; ++m) {
                        if (covers(i, m, left) && covers(m, j, right)) {
                            at(i, j, rule.lhs) = Choice{r, static_cast<std::uint32_t>(m)};
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    if (!covers(0, n, h.start())) {
        return std::nullopt;
    }

    Word out;
    // Work items: (nonterminal, i, j).
    std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> stack{{h.start(), 0, n}};
    while (!stack.empty()) {
        auto [a, i, j] = stack.back();
        stack.pop_back();
        if (i == j) {
            auto filler = shortest.expand(a, limits.max_witness_length);
            if (!filler) {
                return std::nullopt;
            }
            out.insert(out.end(), filler->begin(), filler->end());
        } else {
            const Choice c = at(i, j, a);
            const Rule& rule = rules[c.rule];
            if (rule.rhs.size() == 1) {
                out.push_back(rule.rhs[0].index);
            } else {
                stack.emplace_back(rule.rhs[1].index, c.split, j);
                stack.emplace_back(rule.rhs[0].index, i, c.split);
            }
        }
        if (out.size() > limits.max_witness_length) {
            return std::nullopt;
        }
    }
    return out;
}

} // namespace pangram
