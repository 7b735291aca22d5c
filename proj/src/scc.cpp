#include "pangram/scc.hpp"

#include <algorithm>

namespace pangram {

SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors) {
    const std::size_t n = successors.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> number(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    // (node, index of the next successor to explore)
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    std::size_t counter = 0;

    SccDecomposition result;
    result.component_of.assign(n, 0);

    for (std::size_t root = 0; root < n; ++root) {
        if (number[root] != unvisited) {
            continue;
        }
        frames.emplace_back(root, 0);
        number[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < successors[v].size()) {
                const std::size_t w = successors[v][next++];
                if (number[w] == unvisited) {
                    number[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], number[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == number[done]) {
                std::vector<std::size_t> component;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != done);
                std::sort(component.begin(), component.end());
                result.components.push_back(std::move(component));
            }
        }
    }
    // Tarjan emits sinks first.
    std::reverse(result.components.begin(), result.components.end());
    for (std::size_t c = 0; c < result.components.size(); ++c) {
        for (std::size_t v : result.components[c]) {
            result.component_of[v] = c;
        }
    }
    return result;
}

} // namespace pangram
