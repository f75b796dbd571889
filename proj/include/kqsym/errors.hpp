#pragma once

#include <stdexcept>

namespace kqsym {

/// A configured search budget (cycle cap, node budget) was exhausted. Results
/// are never silently truncated.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Limits {
    std::size_t max_cycles = 100'000;
    std::uint64_t max_nodes = 10'000'000;
};

}  // namespace kqsym
