#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pangram {

/// Size caps shared by all exponential procedures. Every cap fails fast with
/// SizeLimitError instead of exhausting memory.
struct Limits {
    /// Largest alphabet for seen-set (bitmask) searches and canonical builders.
    std::size_t max_bitmask_alphabet = 20;
    /// Largest reachable state count for subset and product-of-progress constructions.
    std::size_t max_subset_states = std::size_t{1} << 20;
    /// Largest alphabet for permutation enumeration.
    std::size_t max_permutation_alphabet = 10;
    /// Largest number of words an enumeration may visit.
    std::uint64_t max_enumeration = 10'000'000;
    /// Steps a single search may take; 0 means unbounded.
    std::uint64_t step_budget = 0;
    /// Longest witness a decider will materialize.
    std::size_t max_witness_length = std::size_t{1} << 20;
    /// Membership checks spent looking for a short pangram in a grammar's own
    /// language before falling back to derivation-based recovery.
    std::uint64_t max_recovery_checks = 200'000;
};

/// Counts search steps against Limits::step_budget.
class StepCounter {
  public:
    StepCounter(const Limits& limits, std::string_view what)
        : budget_(limits.step_budget), what_(what) {}

    void tick(std::uint64_t n = 1);

    std::uint64_t used() const { return used_; }

  private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    std::string_view what_;
};

} // namespace pangram
