#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pangram/alphabet.hpp"
#include "pangram/automata.hpp"
#include "pangram/limits.hpp"
#include "pangram/verdict.hpp"

namespace pangram {

/// A right-hand-side symbol: a terminal letter or a nonterminal index.
struct GrammarSymbol {
    enum class Kind : std::uint8_t { terminal, nonterminal };
    Kind kind;
    std::uint32_t index;

    static GrammarSymbol terminal(Letter a) { return {Kind::terminal, a}; }
    static GrammarSymbol nonterminal(std::uint32_t n) { return {Kind::nonterminal, n}; }
    bool is_terminal() const { return kind == Kind::terminal; }

    friend auto operator<=>(const GrammarSymbol&, const GrammarSymbol&) = default;
};

struct Rule {
    std::uint32_t lhs;
    std::vector<GrammarSymbol> rhs;

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// A rule written with symbol names, as in grammar files.
struct NamedRule {
    std::string lhs;
    std::vector<std::string> rhs;
};

/// Context-free grammar. Nonterminal names are disjoint from terminal symbols.
class Cfg {
  public:
    Cfg(Alphabet terminals, std::vector<std::string> nonterminals, std::uint32_t start,
        std::vector<Rule> rules);

    static Cfg from_names(Alphabet terminals, std::vector<std::string> nonterminals,
                          const std::string& start, const std::vector<NamedRule>& rules);

    const Alphabet& terminals() const { return terminals_; }
    const std::vector<std::string>& nonterminals() const { return nonterminals_; }
    std::size_t nonterminal_count() const { return nonterminals_.size(); }
    std::uint32_t start() const { return start_; }
    const std::vector<Rule>& rules() const { return rules_; }
    /// Total number of symbols over all rules, counting each left-hand side once.
    std::size_t size() const;

    std::vector<NamedRule> named_rules() const;
    std::string symbol_name(const GrammarSymbol& s) const;

    friend bool operator==(const Cfg&, const Cfg&) = default;

  private:
    Alphabet terminals_;
    std::vector<std::string> nonterminals_;
    std::uint32_t start_ = 0;
    std::vector<Rule> rules_;
};

/// Chomsky normal form: rules N -> A B and N -> a only. Whether the empty word
/// belongs to the language is tracked outside the rule set.
struct CnfGrammar {
    Cfg grammar;
    bool derives_empty = false;
};

/// Removes rules that use non-generating nonterminals or whose left side is
/// unreachable, then drops nonterminals left without a role. The start symbol is kept.
Cfg trim(const Cfg& g);

/// TERM, BIN, DEL, UNIT, then trim. Language-equivalent modulo the empty word.
CnfGrammar to_cnf(const Cfg& g);

/// CYK recognizer over a grammar converted to CNF once.
class CykParser {
  public:
    explicit CykParser(const Cfg& g);

    bool accepts(const Word& w) const;
    const CnfGrammar& cnf() const { return cnf_; }

  private:
    CnfGrammar cnf_;
    std::vector<std::vector<std::uint32_t>> by_terminal_;
    struct Binary {
        std::uint32_t lhs, left, right;
    };
    std::vector<Binary> binary_;
};

bool cyk_member(const Cfg& g, const Word& w);

/// Shortest derivations per nonterminal (Knuth's generalization of Dijkstra);
/// rules can be masked out to query a restricted grammar.
class ShortestDerivations {
  public:
    static constexpr std::uint64_t unreachable = ~std::uint64_t{0};

    explicit ShortestDerivations(const Cfg& g, const std::vector<bool>* enabled_rules = nullptr);

    bool generating(std::uint32_t n) const { return length_[n] != unreachable; }
    /// Length of the shortest word derivable from n (saturating).
    std::uint64_t length(std::uint32_t n) const { return length_[n]; }
    /// Index of the rule that starts n's shortest derivation.
    std::uint32_t rule(std::uint32_t n) const { return rule_[n]; }
    /// Expands n; nullopt when n is not generating or the word exceeds max_length.
    std::optional<Word> expand(std::uint32_t n, std::size_t max_length) const;
    /// Expands a sentential form; nullopt under the same conditions.
    std::optional<Word> expand(const std::vector<GrammarSymbol>& form, std::size_t max_length) const;

  private:
    const Cfg& g_;
    std::vector<std::uint64_t> length_;
    std::vector<std::uint32_t> rule_;
};

/// Emptiness of L(g); witness is a shortest member (tie-break by rule order).
Verdict is_empty_cfg(const Cfg& g, const Limits& limits = {});

/// CNF(g) plus N -> epsilon for every nonterminal: recognizes the set of all
/// subsequences of members of L(g).
Cfg downward_closure(const Cfg& g);

/// Decides L(g) subset-of P_Sigma by one emptiness test per symbol on the
/// grammar without rules mentioning that symbol. Counterexample: a shortest
/// member missing the first such symbol in alphabet order.
Verdict subset_of_pangrams(const Cfg& g, const Limits& limits = {});

/// Decides L(g) subset-of E_Sigma: subset_of_pangrams plus a consistent
/// length assignment over useful nonterminals with the start at |Sigma|.
Verdict subset_of_perfect_pangrams(const Cfg& g, const Limits& limits = {});

/// A member of L(g) having `u` as a subsequence, if one exists: a CYK pass over
/// CNF(g) where any nonterminal may also cover an empty span, backtracked with
/// empty spans expanded to shortest derivations.
std::optional<Word> member_with_subsequence(const Cfg& g, const Word& u, const Limits& limits = {});

/// Right-linear grammar with one nonterminal per state.
Cfg dfa_to_cfg(const Dfa& x);
Cfg dfa_to_cfg(const Nfa& x);

/// Fresh start S' -> w S.
Cfg concat_word_cfg(const Word& w, const Cfg& g);
/// Fresh start S'' -> S_g | S_h; terminals must match.
Cfg union_cfg(const Cfg& g, const Cfg& h);

} // namespace pangram
