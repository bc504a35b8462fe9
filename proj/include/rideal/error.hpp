#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rideal {

/// Malformed input: unknown letter, out-of-range state, mismatched alphabets.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap was exceeded. `partial` is the count reached when
/// the computation stopped.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t partial)
        : std::runtime_error(what), partial_(partial) {}

    std::size_t partial() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

}  // namespace rideal
