#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for every error raised by the library. `kind()` is a stable
// machine-readable tag used by the CLI when reporting failures as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed input: bad JSON, unparsable rationals, invalid pairs.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input", message) {}
};

// A documented precondition of an operation was not met by the caller.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& message)
      : Error("contract", message) {}
};

// Lattice width search exhausted its radius without finding a functional.
class SearchError : public Error {
 public:
  explicit SearchError(const std::string& message)
      : Error("search", message) {}
};

// An inequality that the construction guarantees was observed to fail.
// Carries a human-readable trace of the recursion state.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error("internal", message) {}
};

}  // namespace toric
