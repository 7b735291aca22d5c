#pragma once

#include <cstddef>
#include <vector>

namespace pangram {

/// Strongly connected components (iterative Tarjan). Components come out in
/// topological order of the condensation: every edge between two components
/// goes from a lower index to a higher one.
struct SccDecomposition {
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t> component_of;
};

SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors);

} // namespace pangram
