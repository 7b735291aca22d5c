#include <algorithm>
#include <string>

#include "pangram/alphabet.hpp"
#include "pangram/error.hpp"
#include "pangram/limits.hpp"
#include "pangram/names.hpp"

namespace pangram {

void StepCounter::tick(std::uint64_t n) {
    used_ += n;
    if (budget_ != 0 && used_ > budget_) {
        throw BudgetExhausted(std::string(what_) + ": step budget of " + std::to_string(budget_) +
                              " exhausted");
    }
}

std::string NameAllocator::fresh(const std::string& base) {
    std::string candidate = base;
    for (std::size_t i = 1; taken_.contains(candidate); ++i) {
        candidate = base + "_" + std::to_string(i);
    }
    taken_.insert(candidate);
    return candidate;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw InputError("alphabet: must contain at least one symbol");
    }
    for (Letter i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) {
            throw InputError("alphabet: symbols must be nonempty tokens");
        }
        if (!index_.emplace(symbols_[i], i).second) {
            throw InputError("alphabet: duplicate symbol '" + symbols_[i] + "'");
        }
    }
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Letter Alphabet::letter(std::string_view symbol, std::string_view context) const {
    if (auto found = find(symbol)) {
        return *found;
    }
    throw InputError(std::string(context) + ": symbol '" + std::string(symbol) +
                     "' is not in the alphabet");
}

Word Alphabet::encode(std::span<const std::string> symbols, std::string_view context) const {
    Word w;
    w.reserve(symbols.size());
    for (const auto& s : symbols) {
        w.push_back(letter(s, context));
    }
    return w;
}

std::vector<std::string> Alphabet::decode(const Word& word) const {
    check(word);
    std::vector<std::string> out;
    out.reserve(word.size());
    for (Letter l : word) {
        out.push_back(symbols_[l]);
    }
    return out;
}

bool Alphabet::single_character_symbols() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() == 1; });
}

std::string Alphabet::render(const Word& word) const {
    check(word);
    const bool joined = single_character_symbols();
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!joined && i != 0) {
            out += ' ';
        }
        out += symbols_[word[i]];
    }
    return out;
}

void Alphabet::require_nonempty(std::string_view context) const {
    if (empty()) {
        throw InputError(std::string(context) + ": alphabet must be nonempty");
    }
}

void Alphabet::check(const Word& word, std::string_view context) const {
    for (Letter l : word) {
        if (l >= symbols_.size()) {
            throw InputError(std::string(context) + ": letter index " + std::to_string(l) +
                             " is outside an alphabet of size " + std::to_string(symbols_.size()));
        }
    }
}

bool is_pangram(const Word& w, const Alphabet& sigma) {
    sigma.require_nonempty("is_pangram");
    sigma.check(w, "is_pangram");
    std::vector<bool> seen(sigma.size(), false);
    std::size_t distinct = 0;
    for (Letter l : w) {
        if (!seen[l]) {
            seen[l] = true;
            ++distinct;
        }
    }
    return distinct == sigma.size();
}

bool is_perfect_pangram(const Word& w, const Alphabet& sigma) {
    return w.size() == sigma.size() && is_pangram(w, sigma);
}

bool is_subsequence(const Word& u, const Word& w) {
    std::size_t matched = 0;
    for (std::size_t i = 0; i < w.size() && matched < u.size(); ++i) {
        if (w[i] == u[matched]) {
            ++matched;
        }
    }
    return matched == u.size();
}

std::uint64_t letter_mask(const Word& w) {
    std::uint64_t mask = 0;
    for (Letter l : w) {
        mask |= std::uint64_t{1} << l;
    }
    return mask;
}

} // namespace pangram
