#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace picod {

/// Raised when a randomized construction exhausts its retry budget without
/// producing a generator matrix that passes its own validity check.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, int attempts)
        : std::runtime_error(what), attempts_(attempts) {}

    int attempts() const { return attempts_; }

private:
    int attempts_;
};

/// Raised when an exhaustive search would exceed the configured ceiling.
/// Carries the up-front size estimate and the number of nodes actually
/// visited before the search refused (0 if refused before starting).
class SearchCeilingError : public std::runtime_error {
public:
    SearchCeilingError(const std::string& what, std::uint64_t estimated,
                       std::uint64_t visited)
        : std::runtime_error(what), estimated_(estimated), visited_(visited) {}

    std::uint64_t estimated_size() const { return estimated_; }
    std::uint64_t nodes_visited() const { return visited_; }

private:
    std::uint64_t estimated_;
    std::uint64_t visited_;
};

} // namespace picod
