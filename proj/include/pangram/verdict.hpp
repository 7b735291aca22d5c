#pragma once

#include <optional>
#include <string>

#include "pangram/alphabet.hpp"

namespace pangram {

/// A decider's answer. For existential problems a witness is an accepted word
/// satisfying the predicate; for universal problems it is a counterexample.
struct Verdict {
    bool answer = false;
    std::optional<Word> witness;
    /// Free-form qualification, e.g. that a witness only belongs to a closure.
    std::string note;

    static Verdict yes(std::optional<Word> witness = std::nullopt, std::string note = {}) {
        return Verdict{true, std::move(witness), std::move(note)};
    }
    static Verdict no(std::optional<Word> witness = std::nullopt, std::string note = {}) {
        return Verdict{false, std::move(witness), std::move(note)};
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

} // namespace pangram
