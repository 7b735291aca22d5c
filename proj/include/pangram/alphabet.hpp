#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pangram {

/// Index of a symbol in its Alphabet.
using Letter = std::uint32_t;

/// A word is a sequence of letters of some Alphabet; the empty word is the empty vector.
using Word = std::vector<Letter>;

/// An ordered finite set of symbol tokens. Declaration order is the canonical
/// order used for every tie-break in the toolkit.
class Alphabet {
  public:
    /// The empty placeholder. Operations that need symbols reject it.
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);
    Alphabet(std::initializer_list<std::string> symbols)
        : Alphabet(std::vector<std::string>(symbols)) {}

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const std::string& operator[](Letter letter) const { return symbols_.at(letter); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<Letter> find(std::string_view symbol) const;
    bool contains(std::string_view symbol) const { return find(symbol).has_value(); }
    /// Throws InputError naming `context` for a symbol outside the alphabet.
    Letter letter(std::string_view symbol, std::string_view context = "word") const;

    Word encode(std::span<const std::string> symbols, std::string_view context = "word") const;
    std::vector<std::string> decode(const Word& word) const;
    /// Joined form when every symbol is one character, space-separated otherwise.
    std::string render(const Word& word) const;
    bool single_character_symbols() const;

    /// Throws InputError if the alphabet is empty.
    void require_nonempty(std::string_view context) const;
    /// Throws InputError if a letter of `word` is out of range.
    void check(const Word& word, std::string_view context = "word") const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

  private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Letter> index_;
};

/// Every symbol of `sigma` occurs at least once in `w`.
bool is_pangram(const Word& w, const Alphabet& sigma);
/// Every symbol of `sigma` occurs exactly once in `w`.
bool is_perfect_pangram(const Word& w, const Alphabet& sigma);
/// `u` embeds into `w` preserving order (greedy left-to-right scan).
bool is_subsequence(const Word& u, const Word& w);

/// Bitmask of letters occurring in `w`; letters must be < 64.
std::uint64_t letter_mask(const Word& w);

} // namespace pangram
