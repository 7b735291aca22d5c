#pragma once

#include <set>
#include <string>
#include <vector>

namespace pangram {

/// Hands out names that collide with nothing registered so far.
class NameAllocator {
  public:
    NameAllocator() = default;
    explicit NameAllocator(const std::vector<std::string>& taken) { reserve(taken); }

    void reserve(const std::string& name) { taken_.insert(name); }
    void reserve(const std::vector<std::string>& names) { taken_.insert(names.begin(), names.end()); }
    bool taken(const std::string& name) const { return taken_.contains(name); }

    /// `base` if free, else `base_1`, `base_2`, ...; the result is reserved.
    std::string fresh(const std::string& base);

  private:
    std::set<std::string> taken_;
};

} // namespace pangram
