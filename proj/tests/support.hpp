#pragma once

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pangram/alphabet.hpp"
#include "pangram/automata.hpp"
#include "pangram/grammar.hpp"
#include "pangram/limits.hpp"
#include "pangram/oracle.hpp"

namespace test {

using namespace pangram;

/// Encodes a word over single-character symbols, e.g. w(sigma, "aab").
inline Word w(const Alphabet& sigma, std::string_view text) {
    std::vector<std::string> symbols;
    for (char c : text) {
        symbols.emplace_back(1, c);
    }
    return sigma.encode(symbols);
}

inline std::string show(const Alphabet& sigma, const std::optional<Word>& word) {
    return word ? "\"" + sigma.render(*word) + "\"" : "none";
}

/// Every word of length <= max_len over sigma.
inline void all_words(std::size_t sigma, std::size_t max_len, const std::function<void(const Word&)>& f) {
    for_each_word(sigma, max_len, Limits{}, [&](const Word& x) {
        f(x);
        return true;
    });
}

/// Grammar from a compact notation: rules "S -> a S b | a b ; A -> ..." with
/// single-character terminals given in `terminals` and whitespace-separated rhs.
inline Cfg grammar(const std::string& terminals, const std::string& text) {
    std::vector<std::string> sigma;
    for (char c : terminals) {
        sigma.emplace_back(1, c);
    }
    std::vector<std::string> nonterminals;
    std::vector<NamedRule> rules;
    std::size_t pos = 0;
    auto tokens = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s + " ") {
            if (c == ' ') {
                if (!cur.empty()) {
                    out.push_back(cur);
                }
                cur.clear();
            } else {
                cur += c;
            }
        }
        return out;
    };
    while (pos < text.size()) {
        auto end = text.find(';', pos);
        std::string part = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        const auto arrow = part.find("->");
        const auto lhs = tokens(part.substr(0, arrow)).at(0);
        if (std::find(nonterminals.begin(), nonterminals.end(), lhs) == nonterminals.end()) {
            nonterminals.push_back(lhs);
        }
        std::string rest = part.substr(arrow + 2);
        std::size_t p = 0;
        while (true) {
            auto bar = rest.find('|', p);
            auto alt = tokens(rest.substr(p, bar == std::string::npos ? std::string::npos : bar - p));
            if (alt.size() == 1 && alt[0] == "eps") {
                alt.clear();
            }
            rules.push_back({lhs, alt});
            if (bar == std::string::npos) {
                break;
            }
            p = bar + 1;
        }
    }
    return Cfg::from_names(Alphabet(sigma), nonterminals, nonterminals.at(0), rules);
}

} // namespace test
