#pragma once

#include <stdexcept>
#include <string>

namespace dyna {

// Bad input from the caller: out-of-range action, malformed config, unknown key.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal contract was broken: shape mismatch, frozen net trained, bad trajectory.
struct ContractError : std::runtime_error {
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite value reached a numeric update. Runs abort with this diagnostic.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not defined for this object (e.g. enumerating a continuous state space).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dyna
