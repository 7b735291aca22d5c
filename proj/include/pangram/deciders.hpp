#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>

#include "pangram/acceptor.hpp"
#include "pangram/limits.hpp"
#include "pangram/verdict.hpp"

namespace pangram {

enum class Problem {
    contains_pangram,
    contains_perfect_pangram,
    covers_pangrams,
    covers_perfect_pangrams,
    all_pangrams,
    all_perfect_pangrams,
};

inline constexpr std::array<Problem, 6> all_problems{
    Problem::contains_pangram, Problem::contains_perfect_pangram, Problem::covers_pangrams,
    Problem::covers_perfect_pangrams, Problem::all_pangrams, Problem::all_perfect_pangrams,
};

/// Kebab-case name, e.g. "covers-pangrams".
std::string_view to_string(Problem p);
std::optional<Problem> parse_problem(std::string_view name);
/// True for the contains-all and all-are problems, whose witnesses are counterexamples.
bool is_universal(Problem p);

/// L contains a pangram.
Verdict contains_pangram(const Acceptor& a, const Limits& limits = {});
/// L contains a permutation of the alphabet.
Verdict contains_perfect_pangram(const Acceptor& a, const Limits& limits = {});
/// L contains every pangram. Throws UndecidableProblem for grammars.
Verdict covers_pangrams(const Acceptor& a, const Limits& limits = {});
/// L contains every permutation of the alphabet.
Verdict covers_perfect_pangrams(const Acceptor& a, const Limits& limits = {});
/// Every member of L is a pangram.
Verdict all_pangrams(const Acceptor& a, const Limits& limits = {});
/// Every member of L is a perfect pangram.
Verdict all_perfect_pangrams(const Acceptor& a, const Limits& limits = {});

Verdict solve(Problem p, const Acceptor& a, const Limits& limits = {});

/// What the summary table promises for a (problem, acceptor) cell.
enum class CellKind { decided, trivial, undecidable };

CellKind table_cell(Problem p, const Acceptor& a);

struct Decision {
    Problem problem;
    CellKind kind;
    Verdict verdict;
};

/// Dispatches one table cell: trivial cells are answered by their short
/// argument, undecidable cells return without a verdict.
Decision decide(Problem p, const Acceptor& a, const Limits& limits = {});

/// Seen-set breadth-first search over (state, letters seen). With `perfect`,
/// a letter may not repeat. Witness: shortest, then lexicographically least.
Verdict seen_set_search(const Nfa& m, bool perfect, const Limits& limits = {});

/// Calls `visit` on every permutation of the alphabet in lexicographic order
/// until it returns true; returns the permutation that stopped it.
std::optional<Word> first_permutation(std::size_t sigma, const Limits& limits,
                                      const std::function<bool(const Word&)>& visit);

} // namespace pangram
