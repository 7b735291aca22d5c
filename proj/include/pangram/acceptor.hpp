#pragma once

#include <functional>
#include <string_view>
#include <variant>

#include "pangram/automata.hpp"
#include "pangram/grammar.hpp"
#include "pangram/subregular.hpp"

namespace pangram {

/// Any language acceptor the deciders understand, plus the class tags that
/// select trivial table cells. Tags are only meaningful on DFAs.
struct Acceptor {
    std::variant<Dfa, Nfa, Cfg, SltSpec, SptSpec> body;
    bool finite = false;
    bool cofinite = false;

    Acceptor(Dfa x) : body(std::move(x)) {}
    Acceptor(Nfa x) : body(std::move(x)) {}
    Acceptor(Cfg x) : body(std::move(x)) {}
    Acceptor(SltSpec x) : body(std::move(x)) {}
    Acceptor(SptSpec x) : body(std::move(x)) {}

    static Acceptor finite_dfa(Dfa x);
    static Acceptor cofinite_dfa(Dfa x);

    const Alphabet& alphabet() const;
    /// "dfa", "nfa", "cfg", "slt" or "spt".
    std::string_view kind() const;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&body);
    }

    friend bool operator==(const Acceptor&, const Acceptor&) = default;
};

/// Membership predicate for any acceptor: run semantics, CYK, or the SLT/SPT
/// definitions. The predicate refers to `a`, which must outlive it.
std::function<bool(const Word&)> make_membership(const Acceptor& a);

/// Throws InputError if a tag is present on a non-DFA or contradicts the language.
void validate_tags(const Acceptor& a);

} // namespace pangram
