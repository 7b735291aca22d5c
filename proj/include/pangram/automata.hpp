#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pangram/alphabet.hpp"
#include "pangram/limits.hpp"
#include "pangram/verdict.hpp"

namespace pangram {

using State = std::uint32_t;

/// A named transition row, as found in automaton files.
struct NamedTransition {
    std::string from;
    std::string symbol;
    std::string to;
};

/// Complete deterministic finite automaton. The transition table is total over
/// states x alphabet; `table[q * |alphabet| + a]` is the successor of q on a.
class Dfa {
  public:
    Dfa(Alphabet alphabet, std::vector<std::string> states, State initial,
        std::vector<bool> accepting, std::vector<State> table);

    /// Resolves names and completes a partial transition relation with a fresh
    /// non-accepting sink. Duplicate (from, symbol) rows are rejected.
    static Dfa from_named(Alphabet alphabet, std::vector<std::string> states,
                          const std::string& initial, const std::vector<std::string>& accepting,
                          const std::vector<NamedTransition>& transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::string& state_name(State q) const { return states_.at(q); }
    State initial() const { return initial_; }
    bool is_accepting(State q) const { return accepting_.at(q); }
    const std::vector<bool>& accepting() const { return accepting_; }
    State next(State q, Letter a) const { return table_[q * alphabet_.size() + a]; }
    const std::vector<State>& table() const { return table_; }

    friend bool operator==(const Dfa&, const Dfa&) = default;

  private:
    Alphabet alphabet_;
    std::vector<std::string> states_;
    State initial_ = 0;
    std::vector<bool> accepting_;
    std::vector<State> table_;
};

/// Nondeterministic finite automaton with a set of initial states and no
/// epsilon moves. Successor sets are sorted and duplicate-free.
class Nfa {
  public:
    Nfa(Alphabet alphabet, std::vector<std::string> states, std::vector<State> initials,
        std::vector<bool> accepting, std::vector<std::vector<State>> table);

    static Nfa from_named(Alphabet alphabet, std::vector<std::string> states,
                          const std::vector<std::string>& initials,
                          const std::vector<std::string>& accepting,
                          const std::vector<NamedTransition>& transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::string& state_name(State q) const { return states_.at(q); }
    const std::vector<State>& initials() const { return initials_; }
    bool is_accepting(State q) const { return accepting_.at(q); }
    const std::vector<bool>& accepting() const { return accepting_; }
    std::span<const State> successors(State q, Letter a) const {
        return table_[q * alphabet_.size() + a];
    }

    friend bool operator==(const Nfa&, const Nfa&) = default;

  private:
    Alphabet alphabet_;
    std::vector<std::string> states_;
    std::vector<State> initials_;
    std::vector<bool> accepting_;
    std::vector<std::vector<State>> table_;
};

/// Directed graph over named nodes; no duplicate edges.
class Graph {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph(std::vector<std::string> nodes, std::vector<Edge> edges);
    static Graph from_names(std::vector<std::string> nodes,
                            const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(std::size_t from, std::size_t to) const { return adjacency_[from * size() + to]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

  private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
    std::vector<bool> adjacency_;
};

bool accepts(const Dfa& m, const Word& w);
bool accepts(const Nfa& m, const Word& w);

/// Seen-set automaton for P_Sigma: one state per subset of the alphabet.
Dfa pangram_dfa(const Alphabet& sigma, const Limits& limits = {});
/// Seen-set automaton for E_Sigma plus one dead state.
Dfa perfect_pangram_dfa(const Alphabet& sigma, const Limits& limits = {});
/// Words of length exactly n: counts 0..n plus an overflow sink.
Dfa exact_length_dfa(const Alphabet& sigma, std::size_t n);
/// Words of length other than n.
Dfa not_exact_length_dfa(const Alphabet& sigma, std::size_t n);
/// Words that do not start with `w`; |w| + 2 states.
Dfa not_prefixed_dfa(const Word& w, const Alphabet& sigma);
/// Union over a of (Sigma \ {a})*: one initial, accepting state per symbol.
Nfa non_pangram_nfa(const Alphabet& sigma);
/// One accepting state looping on everything.
Dfa universal_dfa(const Alphabet& sigma);
/// One rejecting state looping on everything.
Dfa empty_dfa(const Alphabet& sigma);

enum class ProductMode { intersection, union_of };

/// Reachable product of two DFAs over the same alphabet.
Dfa product_dfa(const Dfa& x, const Dfa& y, ProductMode mode);
Dfa complement_dfa(const Dfa& x);
/// Subset construction over reachable subsets; throws SizeLimitError past
/// Limits::max_subset_states.
Dfa determinize(const Nfa& n, const Limits& limits = {});
Nfa to_nfa(const Dfa& x);

/// Minimal complete DFA. States are numbered in length-lexicographic order of
/// the least word reaching them and named by that word, so two DFAs accept the
/// same language iff their minimizations compare equal.
Dfa minimize(const Dfa& x);
bool equivalent(const Dfa& x, const Dfa& y);

/// Emptiness by breadth-first search. A nonempty language yields its shortest
/// member, lexicographically least among the shortest, as witness.
Verdict is_empty(const Dfa& x);
Verdict is_empty(const Nfa& x);

/// True iff L(x) is finite: the useful part of x (reachable and co-reachable) is acyclic.
bool is_finite_language(const Dfa& x);

/// Name used for minimized states: the symbols of the word in brackets.
std::string word_state_name(const Alphabet& sigma, const Word& w);

} // namespace pangram
