#pragma once

#include <set>

#include "pangram/alphabet.hpp"
#include "pangram/automata.hpp"
#include "pangram/limits.hpp"
#include "pangram/verdict.hpp"

namespace pangram {

/// k-strictly-locally-testable language (S, I, E): allowed (k-1)-prefixes,
/// k-windows and (k-1)-suffixes.
class SltSpec {
  public:
    SltSpec(std::size_t k, Alphabet alphabet, std::set<Word> prefixes, std::set<Word> infixes,
            std::set<Word> suffixes);

    std::size_t k() const { return k_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::set<Word>& prefixes() const { return prefixes_; }
    const std::set<Word>& infixes() const { return infixes_; }
    const std::set<Word>& suffixes() const { return suffixes_; }
    std::size_t size() const { return prefixes_.size() + infixes_.size() + suffixes_.size(); }

    friend bool operator==(const SltSpec&, const SltSpec&) = default;

  private:
    std::size_t k_;
    Alphabet alphabet_;
    std::set<Word> prefixes_, infixes_, suffixes_;
};

/// k-strictly-piecewise-testable language: words avoiding every forbidden
/// subsequence (each of length at most k).
class SptSpec {
  public:
    SptSpec(std::size_t k, Alphabet alphabet, std::set<Word> forbidden);

    std::size_t k() const { return k_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::set<Word>& forbidden() const { return forbidden_; }
    std::size_t size() const { return forbidden_.size(); }
    std::size_t symbol_count() const;

    friend bool operator==(const SptSpec&, const SptSpec&) = default;

  private:
    std::size_t k_;
    Alphabet alphabet_;
    std::set<Word> forbidden_;
};

/// Words shorter than k-1, including the empty word, are never members.
bool slt_member(const SltSpec& s, const Word& w);
bool spt_member(const SptSpec& s, const Word& w);

/// Tracks the last k-1 letters; reachable states only.
Dfa slt_to_dfa(const SltSpec& s);
/// Product of per-forbidden-word progress counters, capped by Limits::max_subset_states.
Dfa spt_to_dfa(const SptSpec& s, const Limits& limits = {});

/// Linear-time pangram test for 2-SLT via the condensation of the graph
/// (nodes = alphabet, edges = infixes). The witness is a covering walk.
Verdict slt2_contains_pangram(const SltSpec& s);

/// Linear-time pangram (equivalently perfect pangram) test for forbidden words
/// of length at most 2; the witness is a reversed smallest-first topological order.
Verdict spt2_contains_pangram(const SptSpec& s);

} // namespace pangram
