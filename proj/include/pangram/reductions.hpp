#pragma once

#include <array>
#include <string>
#include <vector>

#include "pangram/automata.hpp"
#include "pangram/grammar.hpp"
#include "pangram/subregular.hpp"

namespace pangram {

/// Order constraints (a, b, c): b lies strictly between a and c.
struct BetweennessInstance {
    using Constraint = std::array<Letter, 3>;

    BetweennessInstance(Alphabet elements, std::vector<Constraint> constraints);

    Alphabet elements;
    std::vector<Constraint> constraints;

    friend bool operator==(const BetweennessInstance&, const BetweennessInstance&) = default;
};

/// Alphabet = nodes; states q_src, one per node, q_fail. Reading node u moves to
/// u when the previous node has an edge to u. A perfect pangram is accepted iff
/// the graph has a Hamiltonian path.
Dfa hamiltonian_to_perfect_pangram_dfa(const Graph& g);

/// Intersection with the exact-length-|Sigma| counter: pangrams of the result
/// are exactly the perfect pangrams of x. The result accepts a finite language.
Dfa perfect_to_pangram(const Dfa& x);

/// Union with the not-length-|Sigma| counter: same perfect pangrams, cofinite result.
Dfa to_cofinite(const Dfa& x);

struct SltReduction {
    SltSpec spec;
    /// Counter symbols for positions 1..|V|, in order.
    std::vector<std::string> counters;
    /// Whether counters were prefixed to avoid clashing with node names.
    bool renamed = false;

    /// Node names of a pangram witness, in visiting order.
    std::vector<std::string> path_of(const Word& witness) const;
};

/// 3-SLT over nodes and counters 1..|V| whose pangrams spell v1 1 v2 2 ... vn n
/// for Hamiltonian paths v1 -> ... -> vn.
SltReduction hamiltonian_to_3slt(const Graph& g);

/// Forbids acb, cab, bac and bca for every constraint (a, b, c).
SptSpec betweenness_to_3spt(const BetweennessInstance& b);

/// w L(g) union NS_w with w the alphabet in order; covers every pangram iff
/// L(g) is universal. Construction only.
Cfg universality_to_pangram_cover(const Cfg& g);

} // namespace pangram
