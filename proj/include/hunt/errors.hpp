#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hunt {

// Malformed or out-of-range input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation's stated precondition does not hold for the given argument.
class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

class NotBipartiteError : public InputError {
public:
    NotBipartiteError(const std::string& what, std::vector<int> odd_walk)
        : InputError(what), odd_walk_(std::move(odd_walk)) {}

    // Closed walk of odd length; first and last entries coincide.
    const std::vector<int>& odd_walk() const noexcept { return odd_walk_; }

private:
    std::vector<int> odd_walk_;
};

// A configured cap was hit before the computation could conclude.
// Maps to CLI exit code 3; never to be read as a negative answer.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what,
                           std::uint64_t explored_states = 0,
                           int undecided_k = 0)
        : std::runtime_error(what),
          explored_states_(explored_states),
          undecided_k_(undecided_k) {}

    std::uint64_t explored_states() const noexcept { return explored_states_; }
    int undecided_k() const noexcept { return undecided_k_; }

private:
    std::uint64_t explored_states_;
    int undecided_k_;
};

// A generated object failed its own verification.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hunt
