#pragma once

#include <cstdint>
#include <random>

#include "pangram/automata.hpp"
#include "pangram/grammar.hpp"
#include "pangram/reductions.hpp"
#include "pangram/subregular.hpp"

namespace pangram {

/// Seeded random instances for tests and the `generate` command.
class Corpus {
  public:
    explicit Corpus(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    std::size_t uniform(std::size_t lo, std::size_t hi);
    bool coin(double p = 0.5);

    Dfa random_dfa(std::size_t sigma, std::size_t states, double accepting = 0.4);
    Graph random_graph(std::size_t nodes, double edge = 0.4);
    BetweennessInstance random_betweenness(std::size_t elements, std::size_t constraints);
    SltSpec random_slt2(std::size_t sigma, double density = 0.5);
    SptSpec random_spt2(std::size_t sigma, std::size_t forbidden);
    /// Finite language: nonterminal i only refers to nonterminals > i.
    /// Every member has length at most max_len.
    Cfg random_finite_cfg(std::size_t sigma, std::size_t nonterminals, std::size_t max_len);

  private:
    std::mt19937_64 rng_;
};

/// "a", "b", ... for n <= 26, then "s0", "s1", ...
Alphabet letters(std::size_t n);

/// Graph on nodes "1".."n" whose edges are the set bits of `mask` over the
/// n*(n-1) ordered pairs without self-loops.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Dfa over `sigma` with `table` and accepting set `accepting_mask`, initial 0,
/// states named "0".."n-1".
Dfa dfa_from_table(const Alphabet& sigma, std::vector<State> table, std::uint64_t accepting_mask);

} // namespace pangram
