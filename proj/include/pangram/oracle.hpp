#pragma once

#include <functional>
#include <set>
#include <string>

#include "pangram/acceptor.hpp"
#include "pangram/deciders.hpp"
#include "pangram/reductions.hpp"

namespace pangram {

// Brute-force ground truth. Everything here relies on membership semantics
// only (run semantics, CYK, the SLT/SPT definitions), never on the deciders.

/// Visits words of length <= max_len in length-then-lexicographic order until
/// `visit` returns false. Throws SizeLimitError past Limits::max_enumeration.
void for_each_word(std::size_t sigma, std::size_t max_len, const Limits& limits,
                   const std::function<bool(const Word&)>& visit);

std::vector<Word> enumerate_language(const Acceptor& a, std::size_t max_len, const Limits& limits = {});

Verdict contains_pangram_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits = {});
Verdict contains_perfect_pangram_bruteforce(const Acceptor& a, const Limits& limits = {});
/// Bounded: every pangram of length <= max_len is accepted.
Verdict covers_pangrams_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits = {});
Verdict covers_perfect_pangrams_bruteforce(const Acceptor& a, const Limits& limits = {});
/// Bounded: every accepted word of length <= max_len is a (perfect) pangram.
Verdict all_pangrams_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits = {});
Verdict all_perfect_pangrams_bruteforce(const Acceptor& a, std::size_t max_len, const Limits& limits = {});

Verdict bruteforce(Problem p, const Acceptor& a, std::size_t max_len, const Limits& limits = {});

/// Exhaustive permutation search (at most 10 nodes); witness is the node order.
Verdict hamiltonian_bruteforce(const Graph& g);
/// Exhaustive order search (at most 10 elements); witness is the element order.
Verdict betweenness_bruteforce(const BetweennessInstance& b);

/// Members of L(g) of length <= max_len by fixed-point derivation, no normal form.
std::set<Word> derive_words(const Cfg& g, std::size_t max_len);

/// Independent check of a decider's witness: accepted and satisfying the
/// predicate (existential problems), or a genuine counterexample (universal
/// ones). A verdict without witness passes. `why` receives the failure reason.
bool validate_witness(Problem p, const Acceptor& a, const Verdict& v, std::string* why = nullptr);

} // namespace pangram
