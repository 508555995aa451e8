#pragma once

#include <stdexcept>
#include <string>

namespace sbbm {

// Bad run parameters: grid/field mismatch, malformed config, invalid sizes.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values produced where finite ones are required (symbol blew up,
// state left the representable range). CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// API misuse (e.g. feeding a monitor decreasing times).
class UsageError : public std::logic_error {
 public:
  explicit UsageError(const std::string& what) : std::logic_error(what) {}
};

// Implicit step failed to contract within the iteration budget.
class StepRejected : public std::runtime_error {
 public:
  explicit StepRejected(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbbm
